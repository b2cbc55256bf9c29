#include "codecomp/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace codecomp
{

// ----------------------------------------------------------------------------
// Spaces

bool space_contains( const Space& space, const Point& x )
{
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
    {
        const auto* p = std::get_if<FinitePoint>( &x );
        return p != nullptr && p->index < f->size();
    }
    if ( std::holds_alternative<BSpace>( space ) )
        return std::holds_alternative<BPoint>( x );
    return std::holds_alternative<CirclePoint>( x );
}

bool is_isolated( const Space& space, const Point& x )
{
    if ( std::holds_alternative<FiniteSpace>( space ) )
        return true;
    if ( const auto* b = std::get_if<BPoint>( &x ) )
        return b->is_isolated();
    return false;
}

std::string render( const Space& space, const Point& x )
{
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
        if ( const auto* p = std::get_if<FinitePoint>( &x ); p && p->index < f->size() )
            return f->names[ p->index ];
    return render( x );
}

std::string describe( const Space& space )
{
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
        return "finite(" + std::to_string( f->size() ) + ")";
    if ( std::holds_alternative<BSpace>( space ) )
        return "B";
    const auto d = std::get<CircleRationalSpace>( space ).grid_denominator;
    return d == 0 ? "circle" : "circle(grid " + std::to_string( d ) + ")";
}

// ----------------------------------------------------------------------------
// ActionFamily

namespace
{

std::vector<Element> with_identity( std::vector<Element> elements )
{
    if ( elements.empty() )
        throw std::invalid_argument( "a family needs at least one element" );
    if ( std::none_of( elements.begin(), elements.end(), []( const Element& g ) { return is_identity( g ); } ) )
        elements.insert( elements.begin(), identity_like( elements.front() ) );
    return elements;
}

std::uint64_t factorial_capped( std::uint64_t n, std::uint64_t cap )
{
    std::uint64_t f = 1;
    for ( std::uint64_t i = 2; i <= n; ++i )
    {
        f *= i;
        if ( f > cap )
            return cap + 1;
    }
    return f;
}

} // namespace

ActionFamily ActionFamily::enumerated( std::vector<Element> elements )
{
    return ActionFamily{ Enumerated{ with_identity( std::move( elements ) ) } };
}

ActionFamily ActionFamily::generated( std::vector<Element> generators, std::size_t budget )
{
    return ActionFamily{ Generated{ with_identity( std::move( generators ) ), budget } };
}

ActionFamily ActionFamily::named( NamedFamily family )
{
    if ( ( family.kind == NamedKind::t_n || family.kind == NamedKind::dihedral_t ) && family.n == 0 )
        throw std::invalid_argument( "named family parameter must be >= 1" );
    if ( family.kind == NamedKind::cyclic_rotation )
        family.q = mod_one( family.q );
    return ActionFamily{ std::move( family ) };
}

std::string label( const NamedFamily& family )
{
    switch ( family.kind )
    {
    case NamedKind::t_n:
        return "T_" + std::to_string( family.n );
    case NamedKind::t_all:
        return "T";
    case NamedKind::g_all:
        return "G";
    case NamedKind::sigma:
        return "Sigma";
    case NamedKind::sigma_star:
        return "SigmaStar";
    case NamedKind::dihedral_t:
        return "DihedralT(" + std::to_string( family.n ) + ")";
    case NamedKind::cyclic_rotation:
        return "CyclicRotation(" + to_string( family.q ) + ")";
    case NamedKind::custom:
        break;
    }
    return "Custom(" + family.custom_id + ")";
}

std::string ActionFamily::label() const
{
    if ( const auto* n = as_named() )
        return codecomp::label( *n );
    auto list = []( const std::vector<Element>& elems ) {
        std::string out;
        for ( const auto& g : elems )
        {
            if ( !out.empty() )
                out += ", ";
            out += render( g );
        }
        return out;
    };
    if ( const auto* e = as_enumerated() )
        return "{" + list( e->elements ) + "}";
    return "<" + list( as_generated()->generators ) + ">";
}

bool is_finite( const NamedFamily& family )
{
    switch ( family.kind )
    {
    case NamedKind::t_n:
    case NamedKind::dihedral_t:
    case NamedKind::cyclic_rotation:
        return true;
    default:
        return false;
    }
}

std::optional<bool> contains( const NamedFamily& family, const Element& g )
{
    const auto* p = std::get_if<NatPermutation>( &g );
    const auto* d = std::get_if<DihedralElement>( &g );
    switch ( family.kind )
    {
    case NamedKind::t_n:
        return p && p->is_finitary() && p->max_support() <= family.n;
    case NamedKind::t_all:
        return p && p->is_finitary();
    case NamedKind::g_all:
        return p != nullptr;
    case NamedKind::sigma:
        return d && !d->flip();
    case NamedKind::sigma_star:
        return d != nullptr;
    case NamedKind::dihedral_t:
        return d && ( d->angle() * static_cast<std::int64_t>( family.n ) ).denominator() == 1;
    case NamedKind::cyclic_rotation:
        return d && !d->flip() && ( d->angle() * family.q.denominator() ).denominator() == 1;
    case NamedKind::custom:
        break;
    }
    return std::nullopt;
}

std::vector<Element> sample_prefix( const NamedFamily& family, std::size_t count )
{
    std::vector<Element> out;
    auto full = [ & ]() { return out.size() >= count; };

    switch ( family.kind )
    {
    case NamedKind::t_n:
    {
        if ( factorial_capped( family.n, count ) <= count )
            for ( auto& p : all_permutations_of( family.n ) )
                out.emplace_back( std::move( p ) );
        else
        {
            out.emplace_back( NatPermutation::identity() );
            for ( Index n = 2; n <= family.n && !full(); ++n )
                for ( Index k = 1; k < n && !full(); ++k )
                    out.emplace_back( NatPermutation::cycle( { k, n } ) );
        }
        break;
    }
    case NamedKind::g_all:
        out.emplace_back( NatPermutation::identity() );
        out.emplace_back( shift_sigma() );
        out.emplace_back( shift_sigma().inverse() );
        [[fallthrough]];
    case NamedKind::t_all:
        if ( out.empty() )
            out.emplace_back( NatPermutation::identity() );
        // Transpositions (k n), ordered by n: they generate every T_n.
        for ( Index n = 2; !full(); ++n )
            for ( Index k = 1; k < n && !full(); ++k )
                out.emplace_back( NatPermutation::cycle( { k, n } ) );
        break;
    case NamedKind::sigma:
    case NamedKind::sigma_star:
        for ( std::int64_t m = 1; !full(); ++m )
            for ( std::int64_t k = 0; k < m && !full(); ++k )
            {
                if ( std::gcd( k, m ) != 1 && !( k == 0 && m == 1 ) )
                    continue;
                out.emplace_back( DihedralElement::phi( Rational{ k, m } ) );
                if ( family.kind == NamedKind::sigma_star && !full() )
                    out.emplace_back( DihedralElement::eps( Rational{ k, m } ) );
            }
        break;
    case NamedKind::dihedral_t:
        for ( auto& g : dihedral_T( family.n ) )
        {
            if ( full() )
                break;
            out.emplace_back( g );
        }
        break;
    case NamedKind::cyclic_rotation:
    {
        const auto b = family.q.denominator();
        for ( std::int64_t k = 0; k < b && !full(); ++k )
            out.emplace_back( DihedralElement::phi( Rational{ k, b } ) );
        break;
    }
    case NamedKind::custom:
        break;
    }
    if ( out.size() > count )
        out.erase( out.begin() + static_cast<std::ptrdiff_t>( count ), out.end() );
    return out;
}

// ----------------------------------------------------------------------------
// Closure and enumeration

EnumerationResult closure( std::span<const Element> generators, std::size_t budget )
{
    EnumerationResult result;
    std::set<Element> seen;
    std::deque<std::size_t> queue;

    auto add = [ & ]( const Element& g ) {
        if ( !seen.insert( g ).second )
            return true;
        if ( result.elements.size() >= budget )
            return false;
        result.elements.push_back( g );
        queue.push_back( result.elements.size() - 1 );
        return true;
    };

    for ( const auto& g : generators )
        if ( !add( g ) )
        {
            result.complete = false;
            result.reason = "closure budget " + std::to_string( budget ) + " exhausted";
            return result;
        }

    while ( !queue.empty() )
    {
        const auto current = result.elements[ queue.front() ];
        queue.pop_front();
        for ( const auto& g : generators )
            if ( !add( compose( current, g ) ) )
            {
                result.complete = false;
                result.reason = "closure budget " + std::to_string( budget ) + " exhausted";
                return result;
            }
    }
    return result;
}

EnumerationResult enumerate( const ActionFamily& family, const Budgets& budgets )
{
    if ( const auto* e = family.as_enumerated() )
        return { e->elements, true, {} };
    if ( const auto* g = family.as_generated() )
        return closure( g->generators, g->budget != 0 ? g->budget : budgets.closure );

    const auto& named = *family.as_named();
    if ( named.kind == NamedKind::t_n && factorial_capped( named.n, budgets.closure ) > budgets.closure )
        return { sample_prefix( named, budgets.closure ), false,
                 label( named ) + " has more than " + std::to_string( budgets.closure ) + " elements" };
    if ( is_finite( named ) )
        return { sample_prefix( named, budgets.closure ), true, {} };
    if ( named.kind == NamedKind::custom )
        return { {}, false, label( named ) + " has no enumeration" };
    return { sample_prefix( named, budgets.closure ), false, label( named ) + " is infinite" };
}

// ----------------------------------------------------------------------------
// Orbits

bool OrbitResult::contains( const Point& x ) const
{
    return std::find( points.begin(), points.end(), x ) != points.end();
}

namespace
{

OrbitResult bfs_orbit( std::span<const Element> acting, const Point& x, std::size_t budget )
{
    OrbitResult result;
    std::set<Point> seen{ x };
    result.points.push_back( x );
    std::size_t expanded = 0;
    while ( expanded < result.points.size() )
    {
        if ( expanded >= budget )
        {
            result.complete = false;
            return result;
        }
        const auto current = result.points[ expanded++ ];
        for ( const auto& g : acting )
        {
            auto y = codecomp::apply( g, current );
            if ( seen.insert( y ).second )
                result.points.push_back( std::move( y ) );
        }
    }
    return result;
}

void require_kind( const Space& space, const NamedFamily& family )
{
    const bool on_b = family.kind == NamedKind::t_n || family.kind == NamedKind::t_all
                      || family.kind == NamedKind::g_all;
    const bool on_circle = family.kind == NamedKind::sigma || family.kind == NamedKind::sigma_star
                           || family.kind == NamedKind::dihedral_t || family.kind == NamedKind::cyclic_rotation;
    if ( ( on_b && !std::holds_alternative<BSpace>( space ) )
         || ( on_circle && !std::holds_alternative<CircleRationalSpace>( space ) ) )
        throw std::invalid_argument( label( family ) + " does not act on " + describe( space ) );
}

} // namespace

OrbitResult orbit( const Space& space, const ActionFamily& family, const Point& x, std::size_t budget )
{
    if ( !space_contains( space, x ) )
        throw std::invalid_argument( "point " + render( x ) + " is not in " + describe( space ) );

    if ( const auto* e = family.as_enumerated() )
        return bfs_orbit( e->elements, x, budget );
    if ( const auto* g = family.as_generated() )
        return bfs_orbit( g->generators, x, budget );

    const auto& named = *family.as_named();
    require_kind( space, named );

    switch ( named.kind )
    {
    case NamedKind::t_n:
    {
        const auto b = std::get<BPoint>( x );
        OrbitResult r;
        if ( b.is_zero() || b.index() > named.n )
            r.points = { x };
        else
        {
            r.points.push_back( x );
            for ( Index k = 1; k <= named.n; ++k )
                if ( k != b.index() )
                    r.points.emplace_back( BPoint::recip( k ) );
        }
        r.closed_form = b.is_zero() || b.index() > named.n ? "{" + render( x ) + "}"
                                                            : "{1, ..., 1/" + std::to_string( named.n ) + "}";
        return r;
    }
    case NamedKind::t_all:
    case NamedKind::g_all:
    {
        const auto b = std::get<BPoint>( x );
        OrbitResult r;
        if ( b.is_zero() )
        {
            r.points = { x };
            r.closed_form = "{0}";
            return r;
        }
        // Transpositions (k j) realise every 1/j; the prefix is genuine orbit.
        r.points.push_back( x );
        for ( Index j = 1; j <= budget; ++j )
            if ( j != b.index() )
                r.points.emplace_back( NatPermutation::cycle( { b.index(), j } ).apply( b ) );
        r.complete = false;
        r.closed_form = "B \\ {0}";
        return r;
    }
    case NamedKind::sigma:
    case NamedKind::sigma_star:
    {
        OrbitResult r;
        std::set<Point> seen;
        for ( const auto& g : sample_prefix( named, budget ) )
        {
            auto y = codecomp::apply( g, x );
            if ( seen.insert( y ).second )
                r.points.push_back( std::move( y ) );
        }
        r.complete = false;
        r.closed_form = "all rational points of the circle";
        return r;
    }
    case NamedKind::dihedral_t:
    case NamedKind::cyclic_rotation:
        return bfs_orbit( sample_prefix( named, static_cast<std::size_t>( -1 ) ), x, budget );
    case NamedKind::custom:
        break;
    }
    OrbitResult r;
    r.points = { x };
    r.complete = false;
    return r;
}

std::uint64_t angle_lcm( std::span<const Element> elements )
{
    std::uint64_t l = 1;
    for ( const auto& g : elements )
        if ( const auto* d = std::get_if<DihedralElement>( &g ) )
            l = std::lcm( l, static_cast<std::uint64_t>( d->angle().denominator() ) );
    return l;
}

} // namespace codecomp
