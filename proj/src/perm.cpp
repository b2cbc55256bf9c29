#include "codecomp/perm.hpp"
#include "codecomp/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace codecomp
{

BPoint BPoint::recip( Index k )
{
    if ( k == 0 )
        throw std::invalid_argument( "1/k requires k >= 1" );
    return BPoint{ k };
}

Index BPoint::index() const
{
    if ( _k == 0 )
        throw std::logic_error( "index() of the accumulation point" );
    return _k;
}

std::string to_string( BPoint x )
{
    if ( x.is_zero() )
        return "0";
    if ( x.index() == 1 )
        return "1";
    return "1/" + std::to_string( x.index() );
}

BPoint parse_bpoint( std::string_view text )
{
    const auto value = parse_rational( text );
    if ( value == Rational{ 0 } )
        return BPoint::zero();
    if ( value.numerator() != 1 )
        throw ParseError( "'" + std::string{ text } + "' is not a point of the form 0 or 1/k" );
    return BPoint::recip( static_cast<Index>( value.denominator() ) );
}

std::string to_string( const PermOrder& order )
{
    switch ( order.kind )
    {
    case PermOrder::Kind::finite:
        return std::to_string( order.value );
    case PermOrder::Kind::infinite:
        return "infinite";
    case PermOrder::Kind::undecided:
        break;
    }
    return "undecided";
}

// ----------------------------------------------------------------------------
// Named rules

namespace
{

// The shift lays the positive integers out on one bi-infinite chain
// ... 6 -> 4 -> 2 -> 1 -> 3 -> 5 -> 7 -> ... and moves one step right.
std::int64_t chain_position( Index k )
{
    const auto v = static_cast<std::int64_t>( k );
    return ( k % 2 == 1 ) ? ( v - 1 ) / 2 : -( v / 2 );
}

Index chain_point( std::int64_t pos )
{
    return pos >= 0 ? static_cast<Index>( 2 * pos + 1 ) : static_cast<Index>( -2 * pos );
}

const NamedRule shift_sigma_rule{
    "shift_sigma",
    []( Index k, std::int64_t n ) { return chain_point( chain_position( k ) + n ); },
    Support::infinite(),
    PermOrder::infinite(),
    Index{ 1 },
};

} // namespace

const NamedRule& named_rule( std::string_view id )
{
    if ( id == shift_sigma_rule.id )
        return shift_sigma_rule;
    throw ParseError( "unknown permutation rule '" + std::string{ id } + "'" );
}

// ----------------------------------------------------------------------------
// NatPermutation

namespace
{

using Moves = NatPermutation::Moves;
using Factor = NatPermutation::Factor;
using RulePower = NatPermutation::RulePower;

Index moves_apply( const Moves& m, Index k )
{
    const auto it = m.find( k );
    return it == m.end() ? k : it->second;
}

Moves moves_compose( const Moves& p, const Moves& q )
{
    Moves out;
    auto visit = [ & ]( Index k ) {
        const auto image = moves_apply( q, moves_apply( p, k ) );
        if ( image != k )
            out.emplace( k, image );
    };
    for ( const auto& [ k, _ ] : p )
        visit( k );
    for ( const auto& [ k, _ ] : q )
        if ( !p.contains( k ) )
            visit( k );
    return out;
}

Moves moves_inverse( const Moves& m )
{
    Moves out;
    for ( const auto& [ k, v ] : m )
        out.emplace( v, k );
    return out;
}

Index factor_apply( const Factor& f, Index k )
{
    if ( const auto* rp = std::get_if<RulePower>( &f ) )
        return rp->rule->power( k, rp->exponent );
    return moves_apply( std::get<Moves>( f ), k );
}

std::vector<Factor> reduce( const std::vector<Factor>& in )
{
    std::vector<Factor> out;
    for ( const auto& f : in )
    {
        if ( const auto* rp = std::get_if<RulePower>( &f ) )
        {
            if ( rp->exponent == 0 )
                continue;
            if ( !out.empty() )
                if ( auto* top = std::get_if<RulePower>( &out.back() ); top && top->rule == rp->rule )
                {
                    top->exponent += rp->exponent;
                    if ( top->exponent == 0 )
                        out.pop_back();
                    continue;
                }
        }
        else
        {
            const auto& m = std::get<Moves>( f );
            if ( m.empty() )
                continue;
            if ( !out.empty() )
                if ( auto* top = std::get_if<Moves>( &out.back() ) )
                {
                    *top = moves_compose( *top, m );
                    if ( top->empty() )
                        out.pop_back();
                    continue;
                }
        }
        out.push_back( f );
    }
    return out;
}

// Finitary sort key: (largest moved point, number of moved points, table).
auto finitary_key( const Moves& m )
{
    const Index largest = m.empty() ? 0 : m.rbegin()->first;
    return std::make_tuple( largest, m.size() );
}

bool moves_less( const Moves& a, const Moves& b )
{
    const auto ka = finitary_key( a );
    const auto kb = finitary_key( b );
    if ( ka != kb )
        return ka < kb;
    return a < b;
}

bool factor_equal( const Factor& a, const Factor& b )
{
    if ( a.index() != b.index() )
        return false;
    if ( const auto* ra = std::get_if<RulePower>( &a ) )
    {
        const auto& rb = std::get<RulePower>( b );
        return ra->rule == rb.rule && ra->exponent == rb.exponent;
    }
    return std::get<Moves>( a ) == std::get<Moves>( b );
}

bool factor_less( const Factor& a, const Factor& b )
{
    if ( a.index() != b.index() )
        return a.index() < b.index();
    if ( const auto* ra = std::get_if<RulePower>( &a ) )
    {
        const auto& rb = std::get<RulePower>( b );
        return std::tie( ra->rule->id, ra->exponent ) < std::tie( rb.rule->id, rb.exponent );
    }
    return moves_less( std::get<Moves>( a ), std::get<Moves>( b ) );
}

std::string cycles_string( const Moves& m )
{
    if ( m.empty() )
        return "()";
    std::string out;
    std::set<Index> seen;
    for ( const auto& [ start, _ ] : m )
    {
        if ( seen.contains( start ) )
            continue;
        out += '(';
        auto k = start;
        bool first = true;
        do
        {
            if ( !first )
                out += ' ';
            first = false;
            out += std::to_string( k );
            seen.insert( k );
            k = moves_apply( m, k );
        } while ( k != start );
        out += ')';
    }
    return out;
}

} // namespace

NatPermutation NatPermutation::finitary( Moves moves )
{
    std::set<Index> domain;
    std::set<Index> images;
    for ( const auto& [ k, v ] : moves )
    {
        if ( k == 0 || v == 0 )
            throw std::invalid_argument( "permutation points must be positive" );
        domain.insert( k );
        images.insert( v );
    }
    if ( domain != images )
        throw std::invalid_argument( "move table is not a bijection of its domain" );
    std::erase_if( moves, []( const auto& kv ) { return kv.first == kv.second; } );

    NatPermutation p;
    p._moves = std::move( moves );
    return p;
}

NatPermutation NatPermutation::cycle( const std::vector<Index>& points )
{
    std::set<Index> distinct( points.begin(), points.end() );
    if ( distinct.size() != points.size() )
        throw std::invalid_argument( "cycle repeats a point" );
    Moves m;
    for ( std::size_t i = 0; i < points.size(); ++i )
        m[ points[ i ] ] = points[ ( i + 1 ) % points.size() ];
    return finitary( std::move( m ) );
}

NatPermutation NatPermutation::named( std::string_view id )
{
    return from_word( { RulePower{ &named_rule( id ), 1 } } );
}

NatPermutation NatPermutation::from_word( std::vector<Factor> word )
{
    auto reduced = reduce( word );
    NatPermutation p;
    if ( reduced.empty() )
        return p;
    if ( reduced.size() == 1 && std::holds_alternative<Moves>( reduced.front() ) )
    {
        p._moves = std::get<Moves>( std::move( reduced.front() ) );
        return p;
    }

    // Rules with bounded support compose to a finitary permutation.
    std::set<Index> points;
    bool bounded = true;
    for ( const auto& f : reduced )
    {
        if ( const auto* rp = std::get_if<RulePower>( &f ) )
        {
            if ( rp->rule->support.unbounded )
            {
                bounded = false;
                break;
            }
            points.insert( rp->rule->support.points.begin(), rp->rule->support.points.end() );
        }
        else
            for ( const auto& [ k, _ ] : std::get<Moves>( f ) )
                points.insert( k );
    }
    if ( bounded )
    {
        Moves m;
        for ( const auto k : points )
        {
            auto image = k;
            for ( const auto& f : reduced )
                image = factor_apply( f, image );
            if ( image != k )
                m.emplace( k, image );
        }
        p._moves = std::move( m );
        return p;
    }

    p._word = std::move( reduced );
    return p;
}

Index NatPermutation::apply( Index k ) const
{
    if ( k == 0 )
        throw std::invalid_argument( "permutations act on positive integers" );
    if ( _word.empty() )
        return moves_apply( _moves, k );
    for ( const auto& f : _word )
        k = factor_apply( f, k );
    return k;
}

BPoint NatPermutation::apply( BPoint x ) const
{
    if ( x.is_zero() )
        return x;
    return BPoint::recip( apply( x.index() ) );
}

NatPermutation NatPermutation::inverse() const
{
    if ( _word.empty() )
    {
        NatPermutation p;
        p._moves = moves_inverse( _moves );
        return p;
    }
    std::vector<Factor> word;
    for ( auto it = _word.rbegin(); it != _word.rend(); ++it )
    {
        if ( const auto* rp = std::get_if<RulePower>( &*it ) )
            word.emplace_back( RulePower{ rp->rule, -rp->exponent } );
        else
            word.emplace_back( moves_inverse( std::get<Moves>( *it ) ) );
    }
    return from_word( std::move( word ) );
}

PermOrder NatPermutation::order() const
{
    if ( _word.empty() )
    {
        std::uint64_t result = 1;
        std::set<Index> seen;
        for ( const auto& [ start, _ ] : _moves )
        {
            if ( seen.contains( start ) )
                continue;
            std::uint64_t length = 0;
            auto k = start;
            do
            {
                seen.insert( k );
                k = moves_apply( _moves, k );
                ++length;
            } while ( k != start );
            result = std::lcm( result, length );
        }
        return PermOrder::finite( result );
    }
    if ( _word.size() == 1 )
    {
        const auto& rp = std::get<RulePower>( _word.front() );
        const auto& rule_order = rp.rule->order;
        if ( rule_order.kind == PermOrder::Kind::infinite )
            return PermOrder::infinite();
        if ( rule_order.kind == PermOrder::Kind::finite )
        {
            const auto e = static_cast<std::uint64_t>( rp.exponent < 0 ? -rp.exponent : rp.exponent );
            return PermOrder::finite( rule_order.value / std::gcd( rule_order.value, e ) );
        }
    }
    return PermOrder::undecided();
}

Support NatPermutation::support() const
{
    if ( _word.empty() )
    {
        std::set<Index> pts;
        for ( const auto& [ k, _ ] : _moves )
            pts.insert( k );
        return Support::bounded( std::move( pts ) );
    }
    // from_word materialises every bounded word, so a stored word is unbounded.
    return Support::infinite();
}

Index NatPermutation::max_support() const
{
    if ( !_word.empty() )
        throw std::logic_error( "max_support() of a rule-defined permutation" );
    return _moves.empty() ? 0 : _moves.rbegin()->first;
}

std::optional<Index> NatPermutation::escaping_point() const
{
    if ( _word.size() == 1 )
        return std::get<RulePower>( _word.front() ).rule->escaping_point;
    return std::nullopt;
}

bool operator==( const NatPermutation& a, const NatPermutation& b )
{
    if ( a.is_finitary() && b.is_finitary() )
        return a._moves == b._moves;
    if ( a._word.size() == b._word.size()
         && std::equal( a._word.begin(), a._word.end(), b._word.begin(), factor_equal ) )
        return true;

    for ( const auto& [ k, _ ] : a._moves )
        if ( a.apply( k ) != b.apply( k ) )
            return false;
    for ( const auto& [ k, _ ] : b._moves )
        if ( a.apply( k ) != b.apply( k ) )
            return false;
    for ( Index k = 1; k <= NatPermutation::probe_limit; ++k )
        if ( a.apply( k ) != b.apply( k ) )
            return false;
    return true;
}

bool operator<( const NatPermutation& a, const NatPermutation& b )
{
    if ( a.is_finitary() != b.is_finitary() )
        return a.is_finitary();
    if ( a.is_finitary() )
        return moves_less( a._moves, b._moves );
    return std::lexicographical_compare( a._word.begin(), a._word.end(), b._word.begin(), b._word.end(),
                                         factor_less );
}

NatPermutation compose( const NatPermutation& p, const NatPermutation& q )
{
    if ( p.is_finitary() && q.is_finitary() )
        return NatPermutation::finitary( moves_compose( p.moves(), q.moves() ) );

    std::vector<Factor> word;
    auto append = [ &word ]( const NatPermutation& x ) {
        if ( x.is_finitary() )
            word.emplace_back( x.moves() );
        else
            word.insert( word.end(), x.word().begin(), x.word().end() );
    };
    append( p );
    append( q );
    return NatPermutation::from_word( std::move( word ) );
}

NatPermutation power( const NatPermutation& p, std::int64_t n )
{
    if ( !p.is_finitary() && p.word().size() == 1 )
    {
        const auto& rp = std::get<RulePower>( p.word().front() );
        return NatPermutation::from_word( { RulePower{ rp.rule, rp.exponent * n } } );
    }
    const auto base = n < 0 ? p.inverse() : p;
    auto result = NatPermutation::identity();
    for ( std::int64_t i = 0; i < ( n < 0 ? -n : n ); ++i )
        result = compose( result, base );
    return result;
}

NatPermutation shift_sigma()
{
    return NatPermutation::named( "shift_sigma" );
}

std::string to_string( const NatPermutation& p )
{
    if ( p.is_finitary() )
        return cycles_string( p.moves() );
    std::string out;
    for ( const auto& f : p.word() )
    {
        if ( !out.empty() )
            out += '*';
        if ( const auto* rp = std::get_if<RulePower>( &f ) )
        {
            out += rp->rule->id;
            if ( rp->exponent != 1 )
                out += "^" + std::to_string( rp->exponent );
        }
        else
            out += cycles_string( std::get<Moves>( f ) );
    }
    return out;
}

namespace
{

std::string_view trim( std::string_view s )
{
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
        s.remove_prefix( 1 );
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
        s.remove_suffix( 1 );
    return s;
}

Index parse_index( std::string_view token, std::string_view whole )
{
    Index value = 0;
    auto [ ptr, ec ] = std::from_chars( token.data(), token.data() + token.size(), value );
    if ( ec != std::errc{} || ptr != token.data() + token.size() || value == 0 )
        throw ParseError( "bad point '" + std::string{ token } + "' in '" + std::string{ whole } + "'" );
    return value;
}

NatPermutation parse_cycles( std::string_view text )
{
    auto result = NatPermutation::identity();
    std::size_t pos = 0;
    while ( pos < text.size() )
    {
        if ( std::isspace( static_cast<unsigned char>( text[ pos ] ) ) )
        {
            ++pos;
            continue;
        }
        if ( text[ pos ] != '(' )
            throw ParseError( "expected '(' in cycle notation '" + std::string{ text } + "'" );
        const auto close = text.find( ')', pos );
        if ( close == std::string_view::npos )
            throw ParseError( "unclosed cycle in '" + std::string{ text } + "'" );

        std::vector<Index> points;
        auto body = text.substr( pos + 1, close - pos - 1 );
        std::size_t i = 0;
        while ( i < body.size() )
        {
            while ( i < body.size() && ( body[ i ] == ' ' || body[ i ] == ',' ) )
                ++i;
            auto j = i;
            while ( j < body.size() && body[ j ] != ' ' && body[ j ] != ',' )
                ++j;
            if ( j > i )
                points.push_back( parse_index( body.substr( i, j - i ), text ) );
            i = j;
        }
        try
        {
            result = compose( result, NatPermutation::cycle( points ) );
        }
        catch ( const std::invalid_argument& e )
        {
            throw ParseError( std::string{ e.what() } + " in '" + std::string{ text } + "'" );
        }
        pos = close + 1;
    }
    return result;
}

NatPermutation parse_factor( std::string_view text )
{
    text = trim( text );
    if ( text.empty() )
        throw ParseError( "empty permutation factor" );
    if ( text == "id" )
        return NatPermutation::identity();
    if ( text.front() == '(' )
        return parse_cycles( text );

    const auto caret = text.find( '^' );
    const auto id = trim( text.substr( 0, caret ) );
    std::int64_t exponent = 1;
    if ( caret != std::string_view::npos )
    {
        const auto e = trim( text.substr( caret + 1 ) );
        auto [ ptr, ec ] = std::from_chars( e.data(), e.data() + e.size(), exponent );
        if ( ec != std::errc{} || ptr != e.data() + e.size() )
            throw ParseError( "bad exponent in '" + std::string{ text } + "'" );
    }
    return power( NatPermutation::named( id ), exponent );
}

} // namespace

NatPermutation parse_permutation( std::string_view text )
{
    auto result = NatPermutation::identity();
    std::size_t start = 0;
    while ( true )
    {
        const auto star = text.find( '*', start );
        result = compose( result, parse_factor( text.substr( start, star - start ) ) );
        if ( star == std::string_view::npos )
            break;
        start = star + 1;
    }
    return result;
}

std::vector<NatPermutation> all_permutations_of( Index n )
{
    std::vector<Index> images( n );
    std::iota( images.begin(), images.end(), Index{ 1 } );
    std::vector<NatPermutation> out;
    do
    {
        Moves m;
        for ( Index k = 1; k <= n; ++k )
            if ( images[ k - 1 ] != k )
                m.emplace( k, images[ k - 1 ] );
        out.push_back( NatPermutation::finitary( std::move( m ) ) );
    } while ( std::next_permutation( images.begin(), images.end() ) );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace codecomp
