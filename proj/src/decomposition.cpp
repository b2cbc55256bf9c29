#include "codecomp/decomposition.hpp"
#include "codecomp/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace codecomp
{

std::string_view to_string( PartSchedule schedule )
{
    switch ( schedule )
    {
    case PartSchedule::all_t_n:
        return "all_t_n";
    case PartSchedule::all_dihedral_t:
        return "all_dihedral_t";
    case PartSchedule::all_cyclic_rotations:
        return "all_cyclic_rotations";
    case PartSchedule::none:
        break;
    }
    return "none";
}

std::string_view to_string( TargetProperty property )
{
    switch ( property )
    {
    case TargetProperty::distal:
        return "distal";
    case TargetProperty::non_point_transitive:
        return "non_point_transitive";
    case TargetProperty::non_minimal:
        return "non_minimal";
    case TargetProperty::none:
        break;
    }
    return "none";
}

PartSchedule parse_schedule( std::string_view text )
{
    for ( auto s : { PartSchedule::none, PartSchedule::all_t_n, PartSchedule::all_dihedral_t,
                     PartSchedule::all_cyclic_rotations } )
        if ( to_string( s ) == text )
            return s;
    throw ParseError( "unknown part schedule '" + std::string{ text } + "'" );
}

TargetProperty parse_property( std::string_view text )
{
    for ( auto p : { TargetProperty::none, TargetProperty::distal, TargetProperty::non_point_transitive,
                     TargetProperty::non_minimal } )
        if ( to_string( p ) == text )
            return p;
    throw ParseError( "unknown target property '" + std::string{ text } + "'" );
}

namespace
{

using Parts = std::vector<std::vector<Element>>;

// Either every part enumerated completely, or the reason one was not.
struct PartsOrReason
{
    Parts parts;
    std::string reason;
    [[nodiscard]] bool ok() const { return reason.empty(); }
};

PartsOrReason enumerate_parts( const DecompositionCandidate& c )
{
    PartsOrReason out;
    for ( std::size_t i = 0; i < c.parts.size(); ++i )
    {
        auto en = enumerate( c.parts[ i ], c.budgets );
        if ( !en.complete )
        {
            out.reason = "part " + std::to_string( i ) + " (" + c.parts[ i ].label() + ") not enumerable: " + en.reason;
            return out;
        }
        // Listed families may repeat elements; the checks work on sets.
        std::set<Element> seen;
        std::vector<Element> unique;
        for ( auto& g : en.elements )
            if ( seen.insert( g ).second )
                unique.push_back( std::move( g ) );
        out.parts.push_back( std::move( unique ) );
    }
    return out;
}

std::set<Element> product_set( const std::vector<Element>& a, const std::vector<Element>& b )
{
    std::set<Element> out;
    for ( const auto& s : a )
        for ( const auto& t : b )
            out.insert( compose( s, t ) );
    return out;
}

std::string part_name( const DecompositionCandidate& c, std::size_t i )
{
    return "S_" + std::to_string( i ) + " = " + c.parts[ i ].label();
}

bool too_many_pairs( std::size_t a, std::size_t b, const Budgets& budgets )
{
    return a != 0 && b > budgets.pairs / a;
}

} // namespace

std::optional<std::vector<Point>> coverage_points( const Space& space, const Parts& parts )
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
        // Points above the largest moved point are fixed by every element.
        Index bound = 0;
        for ( const auto& part : parts )
            for ( const auto& g : part )
            {
                if ( const auto* p = std::get_if<NatPermutation>( &g ) )
                {
                    if ( !p->is_finitary() )
                        return std::nullopt;
                    bound = std::max( bound, p->max_support() );
                }
                else if ( const auto* pair = std::get_if<PairElement>( &g ) )
                {
                    const auto* p = std::get_if<NatPermutation>( pair->first.get() );
                    if ( p == nullptr || !p->is_finitary() )
                        return std::nullopt;
                    bound = std::max( bound, p->max_support() );
                }
            }
        out.emplace_back( BPoint::zero() );
        for ( Index k = 1; k <= bound; ++k )
            out.emplace_back( BPoint::recip( k ) );
        return out;
    }
    // Distinct isometries of the circle agree on at most two points, and the
    // grid has at least four.
    std::vector<Element> all;
    for ( const auto& part : parts )
        all.insert( all.end(), part.begin(), part.end() );
    auto d = std::get<CircleRationalSpace>( space ).grid_denominator;
    if ( d == 0 )
        d = 4 * angle_lcm( all );
    for ( std::uint64_t k = 0; k < d; ++k )
        out.emplace_back( CirclePoint{ Rational{ static_cast<std::int64_t>( k ), static_cast<std::int64_t>( d ) } } );
    return out;
}

// ----------------------------------------------------------------------------

Verdict check_structure( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    const auto& parts = en.parts;

    for ( std::size_t i = 0; i < parts.size(); ++i )
        if ( std::none_of( parts[ i ].begin(), parts[ i ].end(), []( const Element& g ) { return is_identity( g ); } ) )
        {
            Witness w;
            w.summary = part_name( c, i ) + " does not contain the identity";
            w.parts = { i };
            return Verdict::fails( std::move( w ) );
        }

    std::vector<std::set<Element>> sets;
    for ( const auto& p : parts )
        sets.emplace_back( p.begin(), p.end() );
    for ( std::size_t i = 0; i < sets.size(); ++i )
        for ( std::size_t j = i + 1; j < sets.size(); ++j )
            if ( sets[ i ] == sets[ j ] )
            {
                Witness w;
                w.summary = "parts " + std::to_string( i ) + " and " + std::to_string( j ) + " are equal";
                w.parts = { i, j };
                return Verdict::fails( std::move( w ) );
            }

    std::optional<std::set<Element>> base_set;
    const auto* named = c.base.as_named();
    if ( named == nullptr || is_finite( *named ) )
    {
        auto base = enumerate( c.base, c.budgets );
        if ( base.complete )
            base = closure( base.elements, c.budgets.closure );
        if ( !base.complete )
            return Verdict::undecided( "base not enumerable: " + base.reason );
        base_set.emplace( base.elements.begin(), base.elements.end() );
    }
    for ( std::size_t i = 0; i < parts.size(); ++i )
        for ( const auto& g : parts[ i ] )
        {
            bool inside = false;
            if ( base_set )
                inside = base_set->contains( g );
            else if ( const auto m = contains( *named, g ) )
                inside = *m;
            else
                return Verdict::undecided( "membership in " + c.base.label() + " is unknown" );
            if ( !inside )
            {
                Witness w;
                w.summary = render( g ) + " in " + part_name( c, i ) + " is not in the base";
                w.elements = { g };
                w.parts = { i };
                return Verdict::fails( std::move( w ) );
            }
        }
    return Verdict::holds( std::to_string( parts.size() ) + " distinct parts inside the base" );
}

Verdict check_multi( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    const auto& parts = en.parts;
    const auto points = coverage_points( c.space, parts );
    if ( !points )
        return Verdict::undecided( "parts contain non-finitary permutations; B cannot be covered" );

    for ( std::size_t a = 0; a < parts.size(); ++a )
        for ( std::size_t b = a + 1; b < parts.size(); ++b )
        {
            if ( too_many_pairs( parts[ a ].size(), parts[ b ].size(), c.budgets ) )
                return Verdict::undecided( "pair budget exhausted on parts " + std::to_string( a ) + ", "
                                           + std::to_string( b ) );
            for ( const auto& x : *points )
                for ( const auto& s : parts[ a ] )
                {
                    const auto xs = codecomp::apply( s, x );
                    for ( const auto& t : parts[ b ] )
                    {
                        const auto xst = codecomp::apply( t, xs );
                        const auto xts = codecomp::apply( s, codecomp::apply( t, x ) );
                        if ( xst == xts )
                            continue;
                        Witness w;
                        w.summary = render( c.space, x ) + " s t = " + render( c.space, xst ) + " but "
                                    + render( c.space, x ) + " t s = " + render( c.space, xts ) + " for s = "
                                    + render( s ) + " in part " + std::to_string( a ) + ", t = " + render( t )
                                    + " in part " + std::to_string( b );
                        w.points = { x, xst, xts };
                        w.elements = { s, t };
                        w.parts = { a, b };
                        return Verdict::fails( std::move( w ) );
                    }
                }
        }
    return Verdict::holds( "elements of distinct parts commute at " + std::to_string( points->size() ) + " points" );
}

Verdict check_pseudo_multi( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    const auto& parts = en.parts;
    const auto points = coverage_points( c.space, parts );
    if ( !points )
        return Verdict::undecided( "parts contain non-finitary permutations; B cannot be covered" );

    // x S_a for each part, computed on demand.
    std::vector<std::map<Point, std::set<Point>>> cache( parts.size() );
    const auto image = [ & ]( std::size_t a, const Point& x ) -> const std::set<Point>& {
        auto it = cache[ a ].find( x );
        if ( it == cache[ a ].end() )
        {
            std::set<Point> out;
            for ( const auto& s : parts[ a ] )
                out.insert( codecomp::apply( s, x ) );
            it = cache[ a ].emplace( x, std::move( out ) ).first;
        }
        return it->second;
    };
    const auto two_step = [ & ]( std::size_t a, std::size_t b, const Point& x ) {
        std::set<Point> out;
        const auto first = image( a, x ); // copy: `image` may rehash the cache
        for ( const auto& y : first )
        {
            const auto& next = image( b, y );
            out.insert( next.begin(), next.end() );
        }
        return out;
    };

    for ( std::size_t a = 0; a < parts.size(); ++a )
        for ( std::size_t b = a + 1; b < parts.size(); ++b )
            for ( const auto& x : *points )
            {
                const auto ab = two_step( a, b, x );
                const auto ba = two_step( b, a, x );
                if ( ab == ba )
                    continue;
                Witness w;
                w.summary = render( c.space, x ) + " S_" + std::to_string( a ) + " S_" + std::to_string( b )
                            + " has " + std::to_string( ab.size() ) + " points, " + render( c.space, x ) + " S_"
                            + std::to_string( b ) + " S_" + std::to_string( a ) + " has " + std::to_string( ba.size() );
                w.points = { x };
                w.parts = { a, b };
                w.point_sets = { { ab.begin(), ab.end() }, { ba.begin(), ba.end() } };
                return Verdict::fails( std::move( w ) );
            }
    return Verdict::holds( "x S_a S_b = x S_b S_a for all pairs at " + std::to_string( points->size() ) + " points" );
}

Verdict check_strong_pseudo( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    const auto& parts = en.parts;

    for ( std::size_t a = 0; a < parts.size(); ++a )
        for ( std::size_t b = a + 1; b < parts.size(); ++b )
        {
            if ( too_many_pairs( parts[ a ].size(), parts[ b ].size(), c.budgets ) )
                return Verdict::undecided( "pair budget exhausted on parts " + std::to_string( a ) + ", "
                                           + std::to_string( b ) );
            const auto ab = product_set( parts[ a ], parts[ b ] );
            const auto ba = product_set( parts[ b ], parts[ a ] );
            if ( ab == ba )
                continue;
            std::vector<Element> only;
            std::set_symmetric_difference( ab.begin(), ab.end(), ba.begin(), ba.end(), std::back_inserter( only ) );
            Witness w;
            const bool in_ab = ab.contains( only.front() );
            w.summary = render( only.front() ) + " lies in S_" + std::to_string( in_ab ? a : b ) + " S_"
                        + std::to_string( in_ab ? b : a ) + " only";
            w.elements = { only.front() };
            w.parts = { a, b };
            w.element_sets = { { ab.begin(), ab.end() }, { ba.begin(), ba.end() } };
            return Verdict::fails( std::move( w ) );
        }
    return Verdict::holds( "S_a S_b = S_b S_a for all pairs" );
}

// ----------------------------------------------------------------------------

namespace
{

bool covered_by_schedule( PartSchedule schedule, const Element& g )
{
    switch ( schedule )
    {
    case PartSchedule::all_t_n:
    {
        const auto* p = std::get_if<NatPermutation>( &g );
        return p != nullptr && p->is_finitary();
    }
    case PartSchedule::all_dihedral_t:
        return std::holds_alternative<DihedralElement>( g );
    case PartSchedule::all_cyclic_rotations:
    {
        const auto* d = std::get_if<DihedralElement>( &g );
        return d != nullptr && !d->flip();
    }
    case PartSchedule::none:
        break;
    }
    return false;
}

bool follows_schedule( PartSchedule schedule, const ActionFamily& part )
{
    const auto* named = part.as_named();
    if ( named == nullptr )
        return false;
    switch ( schedule )
    {
    case PartSchedule::all_t_n:
        return named->kind == NamedKind::t_n;
    case PartSchedule::all_dihedral_t:
        return named->kind == NamedKind::dihedral_t;
    case PartSchedule::all_cyclic_rotations:
        return named->kind == NamedKind::cyclic_rotation && named->q.numerator() <= 1;
    case PartSchedule::none:
        break;
    }
    return false;
}

// Number of base elements checked against a schedule.
constexpr std::size_t schedule_prefix = 500;

} // namespace

Verdict check_generates( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    std::vector<Element> all;
    for ( const auto& part : en.parts )
        all.insert( all.end(), part.begin(), part.end() );
    if ( all.empty() )
        return Verdict::undecided( "no parts" );

    const auto* named = c.base.as_named();
    const bool infinite_base = named != nullptr && !is_finite( *named );

    if ( !infinite_base )
    {
        auto base = enumerate( c.base, c.budgets );
        if ( base.complete )
            base = closure( base.elements, c.budgets.closure );
        const auto generated = closure( all, c.budgets.closure );
        if ( !base.complete || !generated.complete )
            return Verdict::undecided( "closure budget exhausted" );
        const std::set<Element> b( base.elements.begin(), base.elements.end() );
        const std::set<Element> g( generated.elements.begin(), generated.elements.end() );
        for ( const auto& x : b )
            if ( !g.contains( x ) )
            {
                Witness w;
                w.summary = render( x ) + " is in the base but not generated by the parts";
                w.elements = { x };
                return Verdict::fails( std::move( w ) );
            }
        for ( const auto& x : g )
            if ( !b.contains( x ) )
            {
                Witness w;
                w.summary = render( x ) + " is generated by the parts but not in the base";
                w.elements = { x };
                return Verdict::fails( std::move( w ) );
            }
        return Verdict::holds( "parts generate all " + std::to_string( b.size() ) + " elements" );
    }

    if ( named->kind == NamedKind::custom )
        return Verdict::undecided( "no closed-form facts for " + label( *named ) );
    for ( const auto& g : all )
        if ( contains( *named, g ) == false )
        {
            Witness w;
            w.summary = render( g ) + " is generated by the parts but not in " + label( *named );
            w.elements = { g };
            return Verdict::fails( std::move( w ) );
        }

    const auto prefix = sample_prefix( *named, schedule_prefix );
    if ( c.schedule == PartSchedule::none )
    {
        // Finitely many finite parts cannot generate an infinite base.
        const auto generated = closure( all, c.budgets.closure );
        if ( !generated.complete )
            return Verdict::undecided( "closure budget exhausted" );
        const std::set<Element> g( generated.elements.begin(), generated.elements.end() );
        for ( const auto& x : prefix )
            if ( !g.contains( x ) )
            {
                Witness w;
                w.summary = render( x ) + " is in " + label( *named ) + " but not among the "
                            + std::to_string( g.size() ) + " generated elements";
                w.elements = { x };
                return Verdict::fails( std::move( w ) );
            }
        return Verdict::undecided( "every sampled element is generated, but the base is infinite" );
    }

    for ( const auto& part : c.parts )
        if ( !follows_schedule( c.schedule, part ) )
            return Verdict::undecided( "part " + part.label() + " does not follow schedule "
                                       + std::string{ to_string( c.schedule ) } );
    for ( const auto& x : prefix )
        if ( !covered_by_schedule( c.schedule, x ) )
        {
            Witness w;
            w.summary = render( x ) + " is in " + label( *named ) + " but in no part of schedule "
                        + std::string{ to_string( c.schedule ) };
            w.elements = { x };
            return Verdict::fails( std::move( w ) );
        }

    // Cross-validate the rule on the listed truncation: prefix elements that
    // the schedule places in a listed part must be generated by the parts.
    const auto generated = closure( all, c.budgets.closure );
    if ( !generated.complete )
        return Verdict::undecided( "closure budget exhausted" );
    const std::set<Element> g( generated.elements.begin(), generated.elements.end() );
    std::size_t validated = 0;
    for ( const auto& x : prefix )
    {
        const bool listed = std::any_of( c.parts.begin(), c.parts.end(), [ & ]( const ActionFamily& part ) {
            return contains( *part.as_named(), x ) == true;
        } );
        if ( !listed )
            continue;
        if ( !g.contains( x ) )
        {
            Witness w;
            w.summary = render( x ) + " lies in a listed part but was not generated";
            w.elements = { x };
            return Verdict::fails( std::move( w ) );
        }
        ++validated;
    }
    return Verdict::holds( label( *named ) + " is the union of schedule " + std::string{ to_string( c.schedule ) }
                           + "; " + std::to_string( validated ) + " of " + std::to_string( prefix.size() )
                           + " sampled elements validated against the listed parts" );
}

Verdict check_effective_consequences( const DecompositionCandidate& c )
{
    const auto en = enumerate_parts( c );
    if ( !en.ok() )
        return Verdict::undecided( en.reason );
    const auto& parts = en.parts;

    // Effectiveness of a semigroup containing every product of the parts is
    // all the argument uses. For an infinite base, fall back to the
    // semigroup the parts generate.
    const auto* named = c.base.as_named();
    auto effective = Verdict::undecided( "" );
    if ( named == nullptr || is_finite( *named ) )
        effective = acts_effectively( c.space, c.base, c.budgets );
    else
    {
        std::vector<Element> all;
        for ( const auto& part : parts )
            all.insert( all.end(), part.begin(), part.end() );
        const auto generated = closure( all, c.budgets.closure );
        if ( !generated.complete )
            return Verdict::undecided( "closure budget exhausted" );
        effective = acts_effectively( c.space, ActionFamily::enumerated( generated.elements ), c.budgets );
    }
    if ( !effective.is_holds() )
        return Verdict::undecided( "hypothesis unmet: action is not effective"
                                   + ( effective.is_fails() ? " (" + effective.witness().summary + ")" : "" ) );
    const auto multi = check_multi( c );
    if ( !multi.is_holds() )
        return Verdict::undecided( "hypothesis unmet: not a multi-transformation semigroup" );

    for ( std::size_t a = 0; a < parts.size(); ++a )
        for ( std::size_t b = a + 1; b < parts.size(); ++b )
        {
            for ( const auto& s : parts[ a ] )
                for ( const auto& t : parts[ b ] )
                    if ( !( compose( s, t ) == compose( t, s ) ) )
                    {
                        Witness w;
                        w.summary = "s t != t s for s = " + render( s ) + ", t = " + render( t );
                        w.elements = { s, t };
                        w.parts = { a, b };
                        return Verdict::fails( std::move( w ) );
                    }

            std::vector<Element> both = parts[ a ];
            both.insert( both.end(), parts[ b ].begin(), parts[ b ].end() );
            const auto generated = closure( both, c.budgets.closure );
            if ( !generated.complete )
                return Verdict::undecided( "closure budget exhausted" );
            const std::set<Element> g( generated.elements.begin(), generated.elements.end() );
            const auto product = product_set( parts[ a ], parts[ b ] );
            if ( g != product )
            {
                Witness w;
                w.summary = "<S_" + std::to_string( a ) + " u S_" + std::to_string( b ) + "> has "
                            + std::to_string( g.size() ) + " elements, S_" + std::to_string( a ) + " S_"
                            + std::to_string( b ) + " has " + std::to_string( product.size() );
                w.parts = { a, b };
                w.element_sets = { { g.begin(), g.end() }, { product.begin(), product.end() } };
                return Verdict::fails( std::move( w ) );
            }
        }
    return Verdict::holds( "cross-part elements commute and each <S_a u S_b> equals S_a S_b" );
}

// ----------------------------------------------------------------------------

Verdict negate( const Verdict& v )
{
    if ( v.is_fails() )
    {
        if ( v.resolution() && !v.exact() )
            return Verdict::undecided( "negation of a result at resolution " + to_string( *v.resolution() ) );
        return Verdict::holds( v.detail(), v.witness() );
    }
    if ( v.is_holds() )
    {
        if ( v.resolution() && !v.exact() )
            return Verdict::undecided( "holds only at resolution " + to_string( *v.resolution() ) );
        return Verdict::fails( v.witness(), v.detail() );
    }
    return v;
}

namespace
{

Verdict part_property( const DecompositionCandidate& c, const ActionFamily& part, TargetProperty property )
{
    try
    {
        switch ( property )
        {
        case TargetProperty::distal:
            return is_distal( c.space, part, c.budgets );
        case TargetProperty::non_point_transitive:
            return negate( is_point_transitive( c.space, part, c.resolution, c.sample_points, c.budgets ) );
        case TargetProperty::non_minimal:
            return negate( is_minimal( c.space, part, c.resolution, c.sample_points, c.budgets ) );
        case TargetProperty::none:
            break;
        }
    }
    catch ( const HypothesisError& e )
    {
        return Verdict::undecided( std::string{ "hypothesis unmet: " } + e.what() );
    }
    return Verdict::undecided( "no property requested" );
}

} // namespace

ClassificationReport classify( const DecompositionCandidate& c, TargetProperty property )
{
    ClassificationReport r;
    r.structure = check_structure( c );
    r.multi = check_multi( c );
    r.pseudo_multi = check_pseudo_multi( c );
    r.strong_pseudo = check_strong_pseudo( c );
    r.generates = check_generates( c );
    if ( property != TargetProperty::none )
        for ( std::size_t i = 0; i < c.parts.size(); ++i )
            r.property_per_part.push_back( { i, property, part_property( c, c.parts[ i ], property ) } );

    if ( r.multi.is_holds() && r.pseudo_multi.is_fails() )
        r.violations.emplace_back( "multi holds but pseudo_multi fails" );
    if ( r.strong_pseudo.is_holds() && r.pseudo_multi.is_fails() )
        r.violations.emplace_back( "strong_pseudo holds but pseudo_multi fails" );
    return r;
}

} // namespace codecomp
