#include "codecomp/element.hpp"

#include <stdexcept>

namespace codecomp
{

Transformation Transformation::identity( std::size_t n )
{
    Transformation t;
    t.images.resize( n );
    for ( std::size_t i = 0; i < n; ++i )
        t.images[ i ] = i;
    return t;
}

bool Transformation::is_identity() const
{
    for ( std::size_t i = 0; i < images.size(); ++i )
        if ( images[ i ] != i )
            return false;
    return true;
}

bool Transformation::is_bijective() const
{
    std::vector<bool> hit( images.size(), false );
    for ( const auto v : images )
    {
        if ( v >= images.size() || hit[ v ] )
            return false;
        hit[ v ] = true;
    }
    return true;
}

Transformation compose( const Transformation& f, const Transformation& g )
{
    if ( f.size() != g.size() )
        throw std::invalid_argument( "composing transformations of different spaces" );
    Transformation out;
    out.images.resize( f.size() );
    for ( std::size_t i = 0; i < f.size(); ++i )
        out.images[ i ] = g.images.at( f.images[ i ] );
    return out;
}

PairElement PairElement::make( Element a, Element b )
{
    return { std::make_shared<const Element>( std::move( a ) ), std::make_shared<const Element>( std::move( b ) ) };
}

bool operator==( const PairElement& a, const PairElement& b )
{
    return *a.first == *b.first && *a.second == *b.second;
}

bool operator<( const PairElement& a, const PairElement& b )
{
    if ( *a.first < *b.first )
        return true;
    if ( *b.first < *a.first )
        return false;
    return *a.second < *b.second;
}

namespace
{

[[noreturn]] void mismatch( const char* what )
{
    throw std::invalid_argument( what );
}

struct apply_visitor
{
    const Point& x;

    Point operator()( const NatPermutation& p ) const
    {
        if ( const auto* b = std::get_if<BPoint>( &x ) )
            return p.apply( *b );
        mismatch( "a permutation acts only on points 0 and 1/k" );
    }

    Point operator()( const DihedralElement& g ) const
    {
        if ( const auto* c = std::get_if<CirclePoint>( &x ) )
            return g.apply( *c );
        mismatch( "a circle element acts only on circle points" );
    }

    Point operator()( const Transformation& t ) const
    {
        if ( const auto* f = std::get_if<FinitePoint>( &x ) )
        {
            if ( f->index >= t.size() )
                mismatch( "point outside the transformation's domain" );
            return FinitePoint{ t.images[ f->index ] };
        }
        mismatch( "a transformation acts only on finite-space points" );
    }

    Point operator()( const PairElement& p ) const { return codecomp::apply( *p.first, x ); }

    Point operator()( const AdjoinedIdentity& ) const { return x; }
};

} // namespace

Point apply( const Element& g, const Point& x )
{
    return std::visit( apply_visitor{ x }, g );
}

Element compose( const Element& g, const Element& h )
{
    if ( std::holds_alternative<AdjoinedIdentity>( g ) )
        return h;
    if ( std::holds_alternative<AdjoinedIdentity>( h ) )
        return g;
    if ( g.index() != h.index() )
        mismatch( "composing elements of different kinds" );

    if ( const auto* p = std::get_if<NatPermutation>( &g ) )
        return compose( *p, std::get<NatPermutation>( h ) );
    if ( const auto* d = std::get_if<DihedralElement>( &g ) )
        return dihedral_compose( *d, std::get<DihedralElement>( h ) );
    if ( const auto* t = std::get_if<Transformation>( &g ) )
        return compose( *t, std::get<Transformation>( h ) );

    const auto& a = std::get<PairElement>( g );
    const auto& b = std::get<PairElement>( h );
    return PairElement{ a.first, b.second };
}

bool is_identity( const Element& g )
{
    if ( const auto* p = std::get_if<NatPermutation>( &g ) )
        return p->is_identity();
    if ( const auto* d = std::get_if<DihedralElement>( &g ) )
        return d->is_identity();
    if ( const auto* t = std::get_if<Transformation>( &g ) )
        return t->is_identity();
    return std::holds_alternative<AdjoinedIdentity>( g );
}

Element identity_like( const Element& g )
{
    if ( std::holds_alternative<NatPermutation>( g ) )
        return NatPermutation::identity();
    if ( std::holds_alternative<DihedralElement>( g ) )
        return DihedralElement::identity();
    if ( const auto* t = std::get_if<Transformation>( &g ) )
        return Transformation::identity( t->size() );
    return AdjoinedIdentity{};
}

std::string render( const Element& g )
{
    if ( const auto* p = std::get_if<NatPermutation>( &g ) )
        return to_string( *p );
    if ( const auto* d = std::get_if<DihedralElement>( &g ) )
        return render_eta_phi( *d );
    if ( const auto* t = std::get_if<Transformation>( &g ) )
    {
        std::string out = "[";
        for ( std::size_t i = 0; i < t->size(); ++i )
        {
            if ( i != 0 )
                out += ' ';
            out += std::to_string( t->images[ i ] );
        }
        return out + "]";
    }
    if ( const auto* pair = std::get_if<PairElement>( &g ) )
        return "<" + render( *pair->first ) + ", " + render( *pair->second ) + ">";
    return "e";
}

std::string render( const Point& x )
{
    if ( const auto* b = std::get_if<BPoint>( &x ) )
        return to_string( *b );
    if ( const auto* c = std::get_if<CirclePoint>( &x ) )
        return to_string( *c );
    return "#" + std::to_string( std::get<FinitePoint>( x ).index );
}

} // namespace codecomp
