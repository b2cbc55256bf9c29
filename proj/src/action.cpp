#include "codecomp/action.hpp"
#include "codecomp/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace codecomp
{

// ----------------------------------------------------------------------------
// Proximal relation on finite spaces

namespace
{

// Breadth-first search in the pair graph (x, y) -> (x g, y g) for a diagonal
// pair, keeping the generator path so the coinciding product can be rebuilt.
std::optional<Element> search_coincidence( const FiniteSpace& space, std::span<const Element> family,
                                           std::size_t x, std::size_t y )
{
    if ( family.empty() )
        return std::nullopt;
    if ( x == y )
        return identity_like( family.front() );

    struct Node
    {
        IndexPair parent;
        std::size_t via;
    };
    std::map<IndexPair, Node> visited;
    std::deque<IndexPair> queue;
    visited.emplace( IndexPair{ x, y }, Node{ { x, y }, 0 } );
    queue.emplace_back( x, y );

    while ( !queue.empty() )
    {
        const auto current = queue.front();
        queue.pop_front();
        for ( std::size_t i = 0; i < family.size(); ++i )
        {
            const auto a = std::get<FinitePoint>( codecomp::apply( family[ i ], FinitePoint{ current.first } ) ).index;
            const auto b = std::get<FinitePoint>( codecomp::apply( family[ i ], FinitePoint{ current.second } ) ).index;
            if ( a >= space.size() || b >= space.size() )
                throw std::invalid_argument( "family leaves the finite space" );
            const IndexPair next{ a, b };
            if ( visited.contains( next ) )
                continue;
            visited.emplace( next, Node{ current, i } );
            if ( a == b )
            {
                std::vector<std::size_t> path;
                for ( auto at = next; at != IndexPair{ x, y }; at = visited.at( at ).parent )
                    path.push_back( visited.at( at ).via );
                auto t = family[ path.back() ];
                for ( auto it = std::next( path.rbegin() ); it != path.rend(); ++it )
                    t = compose( t, family[ *it ] );
                return t;
            }
            queue.push_back( next );
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Element> coinciding_element( const FiniteSpace& space, std::span<const Element> family,
                                           std::size_t x, std::size_t y )
{
    return search_coincidence( space, family, x, y );
}

std::set<IndexPair> proximal_pairs( const FiniteSpace& space, std::span<const Element> family )
{
    std::set<IndexPair> out;
    for ( std::size_t x = 0; x < space.size(); ++x )
    {
        out.emplace( x, x );
        for ( std::size_t y = x + 1; y < space.size(); ++y )
            if ( search_coincidence( space, family, x, y ) )
            {
                out.emplace( x, y );
                out.emplace( y, x );
            }
    }
    return out;
}

// ----------------------------------------------------------------------------
// Distality

namespace
{

std::vector<Element> acting_elements( const ActionFamily& family, const Budgets& budgets )
{
    if ( const auto* e = family.as_enumerated() )
        return e->elements;
    if ( const auto* g = family.as_generated() )
        return g->generators;
    auto en = enumerate( family, budgets );
    if ( !en.complete )
        throw std::logic_error( "acting_elements on an infinite family" );
    return en.elements;
}

std::vector<Point> powers_orbit( const NatPermutation& g, Index start, std::size_t count )
{
    std::vector<Point> out;
    auto x = BPoint::recip( start );
    for ( std::size_t i = 0; i < count; ++i )
    {
        out.emplace_back( x );
        x = g.apply( x );
    }
    return out;
}

Verdict distal_on_b( const ActionFamily& family, const Budgets& budgets )
{
    if ( const auto* named = family.as_named() )
    {
        switch ( named->kind )
        {
        case NamedKind::t_n:
            return Verdict::holds( "finite group: every orbit has at most " + std::to_string( named->n ) + " points" );
        case NamedKind::t_all:
        {
            Witness w;
            w.summary = "orbit of 1 is B \\ {0}, which is infinite";
            w.points = { BPoint::recip( 1 ) };
            w.point_sets.push_back( orbit( BSpace{}, family, BPoint::recip( 1 ), 10 ).points );
            return Verdict::fails( std::move( w ) );
        }
        case NamedKind::g_all:
        {
            Witness w;
            w.summary = "orbit of 1 under powers of shift_sigma is {1, 1/3, 1/5, ...}, which is infinite";
            w.points = { BPoint::recip( 1 ) };
            w.elements = { shift_sigma() };
            w.point_sets.push_back( powers_orbit( shift_sigma(), 1, 10 ) );
            return Verdict::fails( std::move( w ) );
        }
        case NamedKind::custom:
            return Verdict::undecided( "no closed-form facts for " + label( *named ) );
        default:
            throw HypothesisError( label( *named ) + " does not act on B by permutations" );
        }
    }

    const auto acting = acting_elements( family, budgets );
    Index bound = 0;
    for ( const auto& g : acting )
    {
        const auto* p = std::get_if<NatPermutation>( &g );
        if ( p == nullptr )
            throw HypothesisError( "distality on B requires a family of permutations, got " + render( g ) );
        if ( const auto escape = p->escaping_point() )
        {
            Witness w;
            w.summary = "orbit of " + to_string( BPoint::recip( *escape ) ) + " under powers of " + to_string( *p )
                        + " is infinite";
            w.points = { BPoint::recip( *escape ) };
            w.elements = { g };
            w.point_sets.push_back( powers_orbit( *p, *escape, 10 ) );
            return Verdict::fails( std::move( w ) );
        }
        if ( !p->is_finitary() )
            return Verdict::undecided( "cannot bound the orbits of " + to_string( *p ) );
        bound = std::max( bound, p->max_support() );
    }

    // Points above the support bound are fixed by every element.
    std::size_t largest = 1;
    for ( Index k = 1; k <= bound; ++k )
    {
        const auto o = orbit( BSpace{}, family.as_named() ? family : ActionFamily::enumerated( acting ),
                              BPoint::recip( k ), budgets.orbit );
        if ( !o.complete )
            return Verdict::undecided( "orbit budget exhausted at 1/" + std::to_string( k ) );
        largest = std::max( largest, o.points.size() );
    }
    return Verdict::holds( "every orbit is finite (largest has " + std::to_string( largest ) + " points)" );
}

Verdict distal_on_finite( const FiniteSpace& space, const ActionFamily& family, const Budgets& budgets )
{
    if ( family.as_named() )
        return Verdict::undecided( "named families do not act on finite spaces" );
    const auto acting = acting_elements( family, budgets );
    for ( std::size_t x = 0; x < space.size(); ++x )
        for ( std::size_t y = x + 1; y < space.size(); ++y )
            if ( auto t = search_coincidence( space, acting, x, y ) )
            {
                Witness w;
                w.summary = "x t = y t for distinct x, y";
                w.points = { FinitePoint{ x }, FinitePoint{ y } };
                w.elements = { std::move( *t ) };
                return Verdict::fails( std::move( w ) );
            }
    return Verdict::holds( "proximal relation is the diagonal" );
}

} // namespace

Verdict is_distal( const Space& space, const ActionFamily& family, const Budgets& budgets )
{
    if ( std::holds_alternative<BSpace>( space ) )
        return distal_on_b( family, budgets );
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
        return distal_on_finite( *f, family, budgets );

    if ( const auto* named = family.as_named(); named && named->kind == NamedKind::custom )
        return Verdict::undecided( "no closed-form facts for " + label( *named ) );
    if ( !family.as_named() )
        for ( const auto& g : acting_elements( family, budgets ) )
            if ( !std::holds_alternative<DihedralElement>( g ) )
                throw HypothesisError( "circle distality expects dihedral elements, got " + render( g ) );
    return Verdict::holds( "isometric action of the circle" );
}

// ----------------------------------------------------------------------------
// Proximality to zero

Verdict proximal_witness_to_zero( const ActionFamily& family, BPoint x, const Rational& eps,
                                  const Budgets& budgets )
{
    if ( x.is_zero() )
        throw std::invalid_argument( "proximal_witness_to_zero needs a non-zero point" );
    if ( eps <= 0 )
        throw std::invalid_argument( "resolution must be positive" );

    std::vector<Element> candidates;
    if ( const auto* named = family.as_named(); named && !is_finite( *named ) )
        candidates = sample_prefix( *named, budgets.closure );
    else
        candidates = enumerate( family, budgets ).elements;

    Witness w;
    Index best = x.index();
    for ( const auto& g : candidates )
    {
        const auto* p = std::get_if<NatPermutation>( &g );
        if ( p == nullptr )
            throw HypothesisError( "proximality to 0 needs permutations, got " + render( g ) );
        const auto image = p->apply( x ).index();
        if ( image <= best )
            continue;
        best = image;
        w.elements.push_back( g );
        w.points.emplace_back( BPoint::recip( image ) );
        if ( Rational{ 1, static_cast<std::int64_t>( image ) } < eps )
        {
            w.summary = to_string( x ) + " " + to_string( *p ) + " = 1/" + std::to_string( image ) + " < "
                        + to_string( eps );
            return Verdict::holds_at( eps, "(0, " + to_string( x ) + ") is proximal at this resolution",
                                      std::move( w ) );
        }
    }
    return Verdict::undecided( "no element among " + std::to_string( candidates.size() ) + " moves "
                               + to_string( x ) + " below " + to_string( eps ) );
}

// ----------------------------------------------------------------------------
// Density

ArcGap largest_gap( std::span<const Point> points )
{
    if ( points.empty() )
        throw std::invalid_argument( "largest_gap of an empty set" );
    std::vector<Rational> qs;
    for ( const auto& p : points )
        qs.push_back( std::get<CirclePoint>( p ).turns() );
    std::sort( qs.begin(), qs.end() );
    qs.erase( std::unique( qs.begin(), qs.end() ), qs.end() );

    ArcGap best{ CirclePoint{ qs.back() }, CirclePoint{ qs.front() }, qs.front() + 1 - qs.back() };
    for ( std::size_t i = 1; i < qs.size(); ++i )
        if ( qs[ i ] - qs[ i - 1 ] > best.width )
            best = { CirclePoint{ qs[ i - 1 ] }, CirclePoint{ qs[ i ] }, qs[ i ] - qs[ i - 1 ] };
    return best;
}

std::vector<Point> default_sample_points( const Space& space, const ActionFamily& family,
                                          const Budgets& budgets )
{
    std::vector<Point> out;
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
    {
        for ( std::size_t i = 0; i < f->size(); ++i )
            out.emplace_back( FinitePoint{ i } );
        return out;
    }
    if ( std::holds_alternative<BSpace>( space ) )
    {
        out.emplace_back( BPoint::zero() );
        out.emplace_back( BPoint::recip( 1 ) );
        return out;
    }

    auto denominator = std::get<CircleRationalSpace>( space ).grid_denominator;
    if ( denominator == 0 )
    {
        std::uint64_t l = 1;
        if ( const auto* named = family.as_named(); named && !is_finite( *named ) )
            l = 1;
        else
            l = angle_lcm( enumerate( family, budgets ).elements );
        denominator = 4 * l;
    }
    for ( std::uint64_t k = 0; k < denominator; ++k )
        out.emplace_back(
            CirclePoint{ Rational{ static_cast<std::int64_t>( k ), static_cast<std::int64_t>( denominator ) } } );
    return out;
}

namespace
{

std::vector<Point> resolve_samples( const Space& space, const ActionFamily& family,
                                    std::span<const Point> samples, const Budgets& budgets )
{
    std::vector<Point> out( samples.begin(), samples.end() );
    if ( out.empty() )
        out = default_sample_points( space, family, budgets );
    for ( const auto& x : out )
        if ( !space_contains( space, x ) )
            throw std::invalid_argument( "sample point " + render( x ) + " is not in " + describe( space ) );
    return out;
}

Verdict density_on_finite( const FiniteSpace& space, const ActionFamily& family, bool every_point,
                           const Budgets& budgets )
{
    // Discrete topology: the closure of an orbit is the orbit itself.
    std::optional<Verdict> first_failure;
    for ( std::size_t i = 0; i < space.size(); ++i )
    {
        const auto o = orbit( space, family, FinitePoint{ i }, budgets.orbit );
        if ( o.points.size() == space.size() )
        {
            if ( !every_point )
                return Verdict::holds( "orbit of " + space.names[ i ] + " is the whole space",
                                       Witness{ {}, { FinitePoint{ i } }, {}, {}, {}, {} } );
            continue;
        }
        if ( !first_failure )
        {
            Witness w;
            for ( std::size_t j = 0; j < space.size(); ++j )
                if ( !o.contains( FinitePoint{ j } ) )
                {
                    w.summary = "orbit of " + space.names[ i ] + " misses " + space.names[ j ];
                    w.points = { FinitePoint{ i }, FinitePoint{ j } };
                    break;
                }
            w.point_sets.push_back( o.points );
            first_failure = Verdict::fails( std::move( w ) );
        }
        if ( every_point )
            return *first_failure;
    }
    if ( every_point || space.size() == 0 )
        return Verdict::holds( "every orbit is the whole space" );
    return *first_failure;
}

Verdict density_on_b( const ActionFamily& family, bool every_point, const Budgets& budgets )
{
    // 0 is fixed by every permutation, and its orbit {0} is closed.
    if ( every_point )
    {
        Witness w;
        w.summary = "orbit of 0 is {0}, which misses 1";
        w.points = { BPoint::zero(), BPoint::recip( 1 ) };
        return Verdict::fails( std::move( w ) );
    }
    if ( const auto* named = family.as_named() )
    {
        if ( named->kind == NamedKind::t_all || named->kind == NamedKind::g_all )
            return Verdict::holds( "orbit of 1 is B \\ {0}, whose closure is B",
                                   Witness{ {}, { BPoint::recip( 1 ) }, {}, {}, {}, {} } );
        if ( named->kind == NamedKind::custom )
            return Verdict::undecided( "no closed-form facts for " + label( *named ) );
    }
    auto en = enumerate( family, budgets );
    if ( !en.complete )
        return Verdict::undecided( en.reason );
    Index bound = 0;
    for ( const auto& g : en.elements )
    {
        const auto* p = std::get_if<NatPermutation>( &g );
        if ( p == nullptr )
            throw HypothesisError( "expected permutations on B, got " + render( g ) );
        if ( !p->is_finitary() )
            return Verdict::undecided( "cannot bound the orbits of " + to_string( *p ) );
        bound = std::max( bound, p->max_support() );
    }
    Witness w;
    w.summary = "finite family: every orbit of a point 1/k is finite and misses 1/" + std::to_string( bound + 1 )
                + " or its neighbours";
    w.points = { BPoint::recip( 1 ), BPoint::recip( bound + 1 ) };
    if ( bound == 0 )
        w.points = { BPoint::recip( 1 ), BPoint::recip( 2 ) };
    return Verdict::fails( std::move( w ) );
}

Verdict density_on_circle( const Space& space, const ActionFamily& family, const Rational& eps,
                           std::span<const Point> samples_in, bool every_point, const Budgets& budgets )
{
    if ( const auto* named = family.as_named() )
    {
        if ( named->kind == NamedKind::custom )
            return Verdict::undecided( "no closed-form facts for " + label( *named ) );
        if ( named->kind == NamedKind::sigma || named->kind == NamedKind::sigma_star )
        {
            // phi(1/m) with m > 1/eps has an orbit with gaps 1/m < eps.
            const auto m = floor_of( Rational{ 1 } / eps ) + 1;
            const auto g = DihedralElement::phi( Rational{ 1, m } );
            // Every orbit of <phi(1/m)> is a translate of the orbit of 0, so
            // 0 and a point off that orbit serve as evidence.
            std::vector<Point> fallback{ CirclePoint{ Rational{ 0 } }, CirclePoint{ Rational{ 1, 2 * m } } };
            const auto samples = samples_in.empty() ? fallback
                                                    : resolve_samples( space, family, samples_in, budgets );
            const auto sub = ActionFamily::generated( { g } );
            std::vector<Point> checked;
            for ( const auto& x : samples )
            {
                const auto o = orbit( space, sub, x, budgets.orbit );
                if ( !o.complete || !( largest_gap( o.points ).width < 2 * eps ) )
                    return Verdict::undecided( "orbit budget too small for denominator " + std::to_string( m ) );
                checked.push_back( x );
                if ( !every_point )
                    break;
            }
            Witness w;
            w.summary = "rotation phi(1/" + std::to_string( m ) + ") with " + std::to_string( m ) + " > 1/eps";
            w.elements = { g };
            w.points = std::move( checked );
            return Verdict::holds_at( eps, "denominator " + std::to_string( m ) + "; infinite subgroup, minimal",
                                      std::move( w ), true );
        }
    }

    const auto samples = resolve_samples( space, family, samples_in, budgets );
    const auto en = enumerate( family, budgets );
    bool any_incomplete = false;
    std::optional<Verdict> failure;

    for ( const auto& x : samples )
    {
        const auto o = orbit( space, family, x, budgets.orbit );
        const auto gap = largest_gap( o.points );
        if ( gap.width < 2 * eps )
        {
            if ( !every_point )
            {
                Witness w;
                w.summary = "orbit of " + render( x ) + " has largest gap " + to_string( gap.width );
                w.points = { x };
                return Verdict::holds_at( eps, "eps-dense orbit", std::move( w ) );
            }
            continue;
        }
        if ( !o.complete )
        {
            any_incomplete = true;
            continue;
        }
        if ( !failure )
        {
            Witness w;
            w.summary = "orbit of " + render( x ) + " (" + std::to_string( o.points.size() )
                        + " points) misses the open arc (" + to_string( gap.start ) + ", " + to_string( gap.end )
                        + ") of width " + to_string( gap.width );
            w.points = { x, gap.start, gap.end };
            w.point_sets.push_back( o.points );
            // A finite family has finite orbits everywhere, none of them dense.
            failure = Verdict::fails_at( eps, std::move( w ), "complete orbit is not eps-dense",
                                         every_point || en.complete );
        }
        if ( every_point )
            return *failure;
    }

    if ( every_point && !any_incomplete )
        return Verdict::holds_at( eps, "every sampled orbit is eps-dense", {} );
    if ( !every_point && failure && !any_incomplete )
        return *failure;
    return Verdict::undecided( "orbit budget exhausted before density could be decided" );
}

Verdict density( const Space& space, const ActionFamily& family, const Rational& eps,
                 std::span<const Point> samples, bool every_point, const Budgets& budgets )
{
    if ( eps <= 0 )
        throw std::invalid_argument( "resolution must be positive" );
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
        return density_on_finite( *f, family, every_point, budgets );
    if ( std::holds_alternative<BSpace>( space ) )
        return density_on_b( family, every_point, budgets );
    return density_on_circle( space, family, eps, samples, every_point, budgets );
}

} // namespace

Verdict is_point_transitive( const Space& space, const ActionFamily& family, const Rational& eps,
                             std::span<const Point> sample_points, const Budgets& budgets )
{
    return density( space, family, eps, sample_points, false, budgets );
}

Verdict is_minimal( const Space& space, const ActionFamily& family, const Rational& eps,
                    std::span<const Point> sample_points, const Budgets& budgets )
{
    return density( space, family, eps, sample_points, true, budgets );
}

// ----------------------------------------------------------------------------
// Effectiveness

namespace
{

std::vector<Point> separating_points( const Space& space, std::span<const Element> elements )
{
    std::vector<Point> out;
    if ( const auto* f = std::get_if<FiniteSpace>( &space ) )
    {
        for ( std::size_t i = 0; i < f->size(); ++i )
            out.emplace_back( FinitePoint{ i } );
        return out;
    }
    if ( std::holds_alternative<BSpace>( space ) )
    {
        Index bound = 1;
        for ( const auto& g : elements )
            if ( const auto* p = std::get_if<NatPermutation>( &g ) )
                bound = std::max( bound, p->is_finitary() ? p->max_support() : NatPermutation::probe_limit );
        out.emplace_back( BPoint::zero() );
        for ( Index k = 1; k <= bound; ++k )
            out.emplace_back( BPoint::recip( k ) );
        return out;
    }
    // Distinct dihedral elements agree on at most two points.
    const auto l = 4 * angle_lcm( elements );
    for ( std::uint64_t k = 0; k < l; ++k )
        out.emplace_back( CirclePoint{ Rational{ static_cast<std::int64_t>( k ), static_cast<std::int64_t>( l ) } } );
    return out;
}

} // namespace

Verdict acts_effectively( const Space& space, const ActionFamily& family, const Budgets& budgets )
{
    const auto en = enumerate( family, budgets );
    if ( !en.complete )
        return Verdict::undecided( en.reason );

    std::vector<Element> elements;
    {
        std::set<Element> seen;
        for ( const auto& g : en.elements )
            if ( seen.insert( g ).second )
                elements.push_back( g );
    }
    const auto n = elements.size();
    if ( n > 1 && n * ( n - 1 ) / 2 > budgets.pairs )
        return Verdict::undecided( "pair budget " + std::to_string( budgets.pairs ) + " exhausted" );

    const auto points = separating_points( space, elements );
    // Action signature of each element; equal signatures mean unseparated.
    std::map<std::vector<Point>, std::size_t> by_signature;
    for ( std::size_t i = 0; i < n; ++i )
    {
        std::vector<Point> signature;
        signature.reserve( points.size() );
        for ( const auto& x : points )
            signature.push_back( codecomp::apply( elements[ i ], x ) );
        auto [ it, inserted ] = by_signature.emplace( std::move( signature ), i );
        if ( !inserted )
        {
            Witness w;
            w.summary = render( elements[ it->second ] ) + " and " + render( elements[ i ] ) + " act identically";
            w.elements = { elements[ it->second ], elements[ i ] };
            return Verdict::fails( std::move( w ) );
        }
    }
    return Verdict::holds( std::to_string( n ) + " elements, pairwise separated" );
}

} // namespace codecomp
