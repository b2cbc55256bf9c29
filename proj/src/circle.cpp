#include "codecomp/circle.hpp"
#include "codecomp/error.hpp"

#include <stdexcept>

namespace codecomp
{

Rational arc_distance( const CirclePoint& a, const CirclePoint& b )
{
    auto d = a.turns() - b.turns();
    if ( d < 0 )
        d = -d;
    const auto other = Rational{ 1 } - d;
    return d < other ? d : other;
}

std::string to_string( const CirclePoint& x )
{
    return to_string( x.turns() );
}

CirclePoint parse_circle_point( std::string_view text )
{
    return CirclePoint{ parse_rational( text ) };
}

CirclePoint DihedralElement::apply( const CirclePoint& x ) const
{
    return CirclePoint{ ( _flip ? -x.turns() : x.turns() ) + _angle };
}

DihedralElement DihedralElement::inverse() const
{
    if ( _flip )
        return *this;
    return { false, -_angle };
}

DihedralElement dihedral_compose( const DihedralElement& g, const DihedralElement& h )
{
    // x g h = (-1)^j ((-1)^i x + q) + p
    const auto carried = h.flip() ? -g.angle() : g.angle();
    return { g.flip() != h.flip(), carried + h.angle() };
}

DihedralElement dihedral_power( const DihedralElement& g, std::int64_t n )
{
    const auto base = n < 0 ? g.inverse() : g;
    auto result = DihedralElement::identity();
    for ( std::int64_t i = 0; i < ( n < 0 ? -n : n ); ++i )
        result = dihedral_compose( result, base );
    return result;
}

std::uint64_t dihedral_order( const DihedralElement& g )
{
    if ( g.flip() )
        return 2;
    return static_cast<std::uint64_t>( g.angle().denominator() );
}

std::vector<DihedralElement> dihedral_T( std::uint64_t m )
{
    if ( m == 0 )
        throw std::invalid_argument( "dihedral_T requires m >= 1" );
    std::vector<DihedralElement> out;
    out.reserve( 2 * m );
    for ( int flip = 0; flip < 2; ++flip )
        for ( std::uint64_t n = 0; n < m; ++n )
            out.emplace_back( flip == 1,
                              Rational{ static_cast<std::int64_t>( n ), static_cast<std::int64_t>( m ) } );
    return out;
}

bool commutes_with_eta( const DihedralElement& g )
{
    return dihedral_compose( g, DihedralElement::eta() ) == dihedral_compose( DihedralElement::eta(), g );
}

std::string to_string( const DihedralElement& g )
{
    if ( g.angle() == Rational{ 0 } )
        return g.flip() ? "eta" : "id";
    return ( g.flip() ? "eps(" : "phi(" ) + to_string( g.angle() ) + ")";
}

std::string render_eta_phi( const DihedralElement& g )
{
    return std::string{ "eta^" } + ( g.flip() ? "1" : "0" ) + " phi(" + to_string( g.angle() ) + ")";
}

namespace
{

std::string_view trim( std::string_view s )
{
    while ( !s.empty() && s.front() == ' ' )
        s.remove_prefix( 1 );
    while ( !s.empty() && s.back() == ' ' )
        s.remove_suffix( 1 );
    return s;
}

Rational parenthesised_angle( std::string_view text, std::string_view whole )
{
    text = trim( text );
    if ( text.size() < 2 || text.front() != '(' || text.back() != ')' )
        throw ParseError( "expected '(angle)' in '" + std::string{ whole } + "'" );
    return parse_rational( text.substr( 1, text.size() - 2 ) );
}

} // namespace

DihedralElement parse_dihedral( std::string_view text )
{
    const auto whole = text;
    text = trim( text );
    if ( text == "id" )
        return DihedralElement::identity();
    if ( text == "eta" )
        return DihedralElement::eta();
    if ( text.starts_with( "phi" ) )
        return DihedralElement::phi( parenthesised_angle( text.substr( 3 ), whole ) );
    if ( text.starts_with( "eps" ) )
        return DihedralElement::eps( parenthesised_angle( text.substr( 3 ), whole ) );
    if ( text.starts_with( "eta^" ) )
    {
        // eta^i phi(a/b)
        const auto rest = trim( text.substr( 4 ) );
        if ( rest.empty() || ( rest.front() != '0' && rest.front() != '1' ) )
            throw ParseError( "expected eta^0 or eta^1 in '" + std::string{ whole } + "'" );
        const bool flip = rest.front() == '1';
        const auto tail = trim( rest.substr( 1 ) );
        if ( !tail.starts_with( "phi" ) )
            throw ParseError( "expected phi(...) in '" + std::string{ whole } + "'" );
        return { flip, parenthesised_angle( tail.substr( 3 ), whole ) };
    }
    throw ParseError( "unknown circle element '" + std::string{ whole } + "'" );
}

} // namespace codecomp
