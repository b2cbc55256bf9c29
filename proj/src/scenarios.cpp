#include "codecomp/scenarios.hpp"
#include "codecomp/error.hpp"
#include "codecomp/report.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace codecomp
{

namespace
{

Budgets budgets()
{
    return Budgets::from_env();
}

Outcome outcome( const Space& space, const Verdict& v )
{
    return { label( v ), render_verdict_evidence( space, v ) };
}

// First verdict that is not Holds, else the last one.
Verdict conjunction( std::vector<Verdict> vs )
{
    for ( auto& v : vs )
        if ( !v.is_holds() )
            return v;
    return vs.back();
}

std::string join( const std::vector<std::string>& items, const std::string& sep = ", " )
{
    std::string out;
    for ( const auto& s : items )
        out += ( out.empty() ? "" : sep ) + s;
    return out;
}

NatPermutation cyc( std::vector<Index> points )
{
    return NatPermutation::cycle( points );
}

std::vector<ActionFamily> t_parts( std::uint64_t from, std::uint64_t to )
{
    std::vector<ActionFamily> parts;
    for ( auto n = from; n <= to; ++n )
        parts.push_back( ActionFamily::T_n( n ) );
    return parts;
}

std::vector<ActionFamily> dihedral_parts( std::initializer_list<std::uint64_t> ms )
{
    std::vector<ActionFamily> parts;
    for ( auto m : ms )
        parts.push_back( ActionFamily::DihedralT( m ) );
    return parts;
}

std::vector<ActionFamily> rotation_parts( std::initializer_list<std::int64_t> ms )
{
    std::vector<ActionFamily> parts;
    for ( auto m : ms )
        parts.push_back( ActionFamily::CyclicRotation( Rational{ 1, m } ) );
    return parts;
}

DecompositionCandidate candidate( Space space, ActionFamily base, std::vector<ActionFamily> parts,
                                  PartSchedule schedule = PartSchedule::none )
{
    DecompositionCandidate c{ std::move( space ), std::move( base ), std::move( parts ), budgets(), schedule,
                              Rational{ 1, 1000 }, {} };
    return c;
}

std::string classification_summary( const ClassificationReport& r )
{
    std::vector<std::string> fields{ "multi=" + label( r.multi ), "pseudo_multi=" + label( r.pseudo_multi ),
                                     "strong_pseudo=" + label( r.strong_pseudo ),
                                     "generates=" + label( r.generates ) };
    if ( !r.property_per_part.empty() )
    {
        std::set<std::string> labels;
        for ( const auto& p : r.property_per_part )
            labels.insert( label( p.verdict ) );
        const auto name = std::string{ to_string( r.property_per_part.front().property ) };
        if ( labels.size() == 1 )
            fields.push_back( "parts " + name + "=" + *labels.begin() );
        else
        {
            std::vector<std::string> each;
            for ( const auto& p : r.property_per_part )
                each.push_back( label( p.verdict ) );
            fields.push_back( "parts " + name + "=[" + join( each ) + "]" );
        }
    }
    for ( const auto& v : r.violations )
        fields.push_back( "VIOLATION " + v );
    return join( fields, " " );
}

Outcome classification_outcome( const DecompositionCandidate& c, TargetProperty property )
{
    const auto r = classify( c, property );
    std::string witness;
    if ( r.multi.is_fails() )
        witness = "multi: " + render_verdict_evidence( c.space, r.multi );
    return { classification_summary( r ), witness };
}

// x (s t) = (x s) t and x e = x on the given points.
Verdict action_law( const Space& space, const std::vector<Element>& elements, const std::vector<Point>& points )
{
    for ( const auto& x : points )
        for ( const auto& s : elements )
        {
            if ( is_identity( s ) && !( codecomp::apply( s, x ) == x ) )
            {
                Witness w;
                w.summary = "identity moves " + render( space, x );
                w.points = { x };
                return Verdict::fails( std::move( w ) );
            }
            for ( const auto& t : elements )
            {
                const auto lhs = codecomp::apply( compose( s, t ), x );
                const auto rhs = codecomp::apply( t, codecomp::apply( s, x ) );
                if ( lhs == rhs )
                    continue;
                Witness w;
                w.summary = "x (s t) = " + render( space, lhs ) + " but (x s) t = " + render( space, rhs );
                w.points = { x, lhs, rhs };
                w.elements = { s, t };
                return Verdict::fails( std::move( w ) );
            }
        }
    return Verdict::holds( "action law on " + std::to_string( points.size() ) + " points" );
}

std::vector<DihedralElement> dihedral_up_to( std::uint64_t max_denominator )
{
    std::set<DihedralElement> all;
    for ( std::uint64_t m = 1; m <= max_denominator; ++m )
        for ( const auto& g : dihedral_T( m ) )
            all.insert( g );
    return { all.begin(), all.end() };
}

std::set<DihedralElement> dihedral_product( std::uint64_t s, std::uint64_t t )
{
    std::set<DihedralElement> out;
    for ( const auto& a : dihedral_T( s ) )
        for ( const auto& b : dihedral_T( t ) )
            out.insert( dihedral_compose( a, b ) );
    return out;
}

// S = {id, swap} acting on two points.
MConstruction two_point_m()
{
    return build_M_construction( { Transformation{ { 0, 1 } }, Transformation{ { 1, 0 } } } );
}

const FiniteSpace two_points{ { "a", "b" } };

DecompositionCandidate m_candidate()
{
    auto m = two_point_m();
    return candidate( two_points, m.monoid, m.parts );
}

// ----------------------------------------------------------------------------

std::vector<Scenario> make_registry()
{
    std::vector<Scenario> r;
    const auto add = [ & ]( std::string id, std::string anchor, std::string description, std::string expected,
                            std::function<Outcome()> run ) {
        r.push_back( { std::move( id ), std::move( anchor ), std::move( description ), std::move( expected ),
                       std::move( run ) } );
    };

    // Convention: B, f_sigma, T_n, T.
    add( "convention.f_sigma", "convention:f_sigma", "1 f_(1 2) = 1/2 and 0 f = 0", "1/2, 0", [] {
        const auto s = cyc( { 1, 2 } );
        return Outcome{ to_string( s.apply( BPoint::recip( 1 ) ) ) + ", " + to_string( s.apply( BPoint::zero() ) ),
                        {} };
    } );
    add( "convention.t_n", "convention:t_n", "|T_n| = n! for n = 1..4, and (1 2) lies in T_2", "1, 2, 6, 24", [] {
        std::vector<std::string> sizes;
        for ( std::uint64_t n = 1; n <= 4; ++n )
            sizes.push_back( std::to_string( build_T_n( n )->as_enumerated()->elements.size() ) );
        const auto t2_family = build_T_n( 2 );
        const auto& t2 = t2_family->as_enumerated()->elements;
        const bool has = std::find( t2.begin(), t2.end(), Element{ cyc( { 1, 2 } ) } ) != t2.end();
        return Outcome{ join( sizes ) + ( has ? "" : ", (1 2) missing" ), {} };
    } );
    add( "convention.t_union", "convention:t", "T is generated by the schedule T_1, T_2, ...", "Holds", [] {
        const auto c = candidate( BSpace{}, ActionFamily::T(), t_parts( 1, 5 ), PartSchedule::all_t_n );
        return outcome( c.space, check_generates( c ) );
    } );

    // Definitions.
    add( "definitions.action_law", "definition:transformation_semigroup",
         "x (s t) = (x s) t and x e = x for T_3 on B and dihedral_T(6) on the circle", "Holds", [] {
             std::vector<Element> t3 = build_T_n( 3 )->as_enumerated()->elements;
             std::vector<Point> bpoints{ BPoint::zero() };
             for ( Index k = 1; k <= 4; ++k )
                 bpoints.emplace_back( BPoint::recip( k ) );
             std::vector<Element> d6;
             for ( const auto& g : dihedral_T( 6 ) )
                 d6.emplace_back( g );
             const CircleRationalSpace circle;
             const auto grid = default_sample_points( circle, ActionFamily::DihedralT( 6 ), budgets() );
             return outcome( BSpace{}, conjunction( { action_law( BSpace{}, t3, bpoints ),
                                                      action_law( circle, d6, grid ) } ) );
         } );
    add( "definitions.effective", "definition:effective_action", "T_4 acts effectively on B", "Holds", [] {
        return outcome( BSpace{}, acts_effectively( BSpace{}, ActionFamily::T_n( 4 ), budgets() ) );
    } );
    add( "definitions.co_decomposition", "definition:co_decomposition",
         "<(1 2)> and <(3 4)> form a co-decomposition of the group they generate on B", "Holds", [] {
             const auto a = ActionFamily::generated( { cyc( { 1, 2 } ) } );
             const auto b = ActionFamily::generated( { cyc( { 3, 4 } ) } );
             const auto base = ActionFamily::generated( { cyc( { 1, 2 } ), cyc( { 3, 4 } ) } );
             const auto c = candidate( BSpace{}, base, { a, b } );
             return outcome( c.space, conjunction( { check_structure( c ), check_multi( c ), check_generates( c ) } ) );
         } );
    add( "definitions.pseudo_multi", "definition:pseudo_multi", "(B, (T_2, T_3)) is pseudo-multi", "Holds", [] {
        const auto c = candidate( BSpace{}, ActionFamily::T_n( 3 ), t_parts( 2, 3 ) );
        return outcome( c.space, check_pseudo_multi( c ) );
    } );
    add( "definitions.strong_pseudo", "definition:strong_pseudo", "(B, (T_n : n <= 4)) is strong pseudo-multi",
         "Holds", [] {
             const auto c = candidate( BSpace{}, ActionFamily::T_n( 4 ), t_parts( 1, 4 ) );
             return outcome( c.space, check_strong_pseudo( c ) );
         } );
    add( "definitions.proximal", "definition:proximal",
         "a constant map makes a and b proximal on {a, b, c}, so the action is not distal", "Fails", [] {
             const FiniteSpace space{ { "a", "b", "c" } };
             const auto f = ActionFamily::enumerated( { Transformation{ { 0, 0, 2 } } } );
             return outcome( space, is_distal( space, f, budgets() ) );
         } );
    add( "definitions.distal", "definition:distal", "a cyclic permutation of {a, b, c} is distal", "Holds", [] {
        const FiniteSpace space{ { "a", "b", "c" } };
        const auto f = ActionFamily::generated( { Transformation{ { 1, 2, 0 } } } );
        return outcome( space, is_distal( space, f, budgets() ) );
    } );
    add( "definitions.minimal", "definition:minimal",
         "a 3-cycle is minimal on {a, b, c}; adding a fixed point d breaks minimality", "Holds, Fails", [] {
             const Rational eps{ 1, 10 };
             const FiniteSpace three{ { "a", "b", "c" } };
             const FiniteSpace four{ { "a", "b", "c", "d" } };
             const auto v1 = is_minimal( three, ActionFamily::generated( { Transformation{ { 1, 2, 0 } } } ), eps, {},
                                         budgets() );
             const auto v2 = is_minimal( four, ActionFamily::generated( { Transformation{ { 1, 2, 0, 3 } } } ), eps,
                                         {}, budgets() );
             return Outcome{ label( v1 ) + ", " + label( v2 ), render_verdict_evidence( four, v2 ) };
         } );
    add( "definitions.point_transitive", "definition:point_transitive",
         "Sigma has an eps-dense orbit on the circle at eps = 1/100", "Holds(1/100)", [] {
             const CircleRationalSpace circle;
             return outcome( circle,
                             is_point_transitive( circle, ActionFamily::Sigma(), Rational{ 1, 100 }, {}, budgets() ) );
         } );
    add( "definitions.sigma_star", "definition:sigma_star",
         "Sigma is inside Sigma*, eta is in Sigma* but not in Sigma, eta phi generates eps", "Holds", [] {
             const auto sigma = ActionFamily::Sigma();
             const auto star = ActionFamily::SigmaStar();
             const auto eta = Element{ DihedralElement::eta() };
             bool ok = contains( *star.as_named(), eta ) == true && contains( *sigma.as_named(), eta ) == false;
             for ( const auto& g : sample_prefix( *sigma.as_named(), 200 ) )
                 ok = ok && contains( *star.as_named(), g ) == true;
             const auto product = closure( std::vector<Element>{ eta, DihedralElement::phi( Rational{ 1, 4 } ) }, 100 );
             const std::set<Element> got( product.elements.begin(), product.elements.end() );
             ok = ok && got.contains( DihedralElement::eps( Rational{ 1, 4 } ) );
             return Outcome{ ok ? "Holds" : "Fails", {} };
         } );

    // example:salam10
    add( "salam10.witness", "example:salam10", "1 f_(1 2) f_(1 3) = 1/2 and 1 f_(1 3) f_(1 2) = 1/3", "1/2, 1/3",
         [] {
             const auto s = cyc( { 1, 2 } );
             const auto m = cyc( { 1, 3 } );
             const auto x = BPoint::recip( 1 );
             return Outcome{ to_string( compose( s, m ).apply( x ) ) + ", " + to_string( compose( m, s ).apply( x ) ),
                             {} };
         } );
    add( "salam10.not_multi", "example:salam10", "(B, (T_n : n <= 3)) is not multi", "Fails", [] {
        const auto c = candidate( BSpace{}, ActionFamily::T(), t_parts( 1, 3 ) );
        return outcome( c.space, check_multi( c ) );
    } );
    add( "salam10.pseudo_multi", "example:salam10", "(B, (T_n : n <= 4)) is pseudo-multi", "Holds", [] {
        const auto c = candidate( BSpace{}, ActionFamily::T(), t_parts( 1, 4 ) );
        return outcome( c.space, check_pseudo_multi( c ) );
    } );
    add( "salam10.products", "example:salam10", "T_n T_m = T_max(n, m) as sets for n, m <= 4", "Holds", [] {
        std::vector<std::set<Element>> t( 5 );
        for ( std::uint64_t n = 1; n <= 4; ++n )
        {
            const auto family = build_T_n( n );
            const auto& es = family->as_enumerated()->elements;
            t[ n ] = { es.begin(), es.end() };
        }
        for ( std::uint64_t n = 1; n <= 4; ++n )
            for ( std::uint64_t m = 1; m <= 4; ++m )
            {
                std::set<Element> prod;
                for ( const auto& a : t[ n ] )
                    for ( const auto& b : t[ m ] )
                        prod.insert( compose( a, b ) );
                if ( prod != t[ std::max( n, m ) ] )
                    return Outcome{ "Fails", "T_" + std::to_string( n ) + " T_" + std::to_string( m ) };
            }
        return Outcome{ "Holds", {} };
    } );

    // Distality on B.
    add( "salam50.finite_orbits", "lemma:salam50", "every orbit of T_6 on B is finite, so T_6 is distal", "Holds",
         [] { return outcome( BSpace{}, is_distal( BSpace{}, ActionFamily::T_n( 6 ), budgets() ) ); } );
    add( "salam50.zero_orbit", "lemma:salam50", "the orbit of 0 under T is {0}", "{0} complete", [] {
        const auto o = orbit( BSpace{}, ActionFamily::T(), BPoint::zero(), budgets().orbit );
        std::vector<std::string> pts;
        for ( const auto& x : o.points )
            pts.push_back( render( x ) );
        return Outcome{ "{" + join( pts ) + "}" + ( o.complete ? " complete" : " incomplete" ), {} };
    } );

    // lemma:salam20
    add( "salam20.rotations", "lemma:salam20",
         "parts <phi(1/2)>, <phi(1/3)> on the circle: elements commute and <S_a u S_b> = S_a S_b", "Holds", [] {
             const auto base = ActionFamily::generated(
                 { DihedralElement::phi( Rational{ 1, 2 } ), DihedralElement::phi( Rational{ 1, 3 } ) } );
             const auto c = candidate( CircleRationalSpace{}, base, rotation_parts( { 2, 3 } ) );
             return outcome( c.space, check_effective_consequences( c ) );
         } );
    add( "salam20.finite_commuting", "lemma:salam20",
         "x -> x + 2 and x -> x + 3 on Z/6: elements commute and <S_a u S_b> = S_a S_b", "Holds", [] {
             const FiniteSpace z6{ { "0", "1", "2", "3", "4", "5" } };
             const Transformation plus2{ { 2, 3, 4, 5, 0, 1 } };
             const Transformation plus3{ { 3, 4, 5, 0, 1, 2 } };
             const auto c = candidate( z6, ActionFamily::generated( { plus2, plus3 } ),
                                       { ActionFamily::generated( { plus2 } ), ActionFamily::generated( { plus3 } ) } );
             return outcome( c.space, check_effective_consequences( c ) );
         } );

    // example:salam70
    add( "salam70.classify", "example:salam70",
         "(B, T) with parts T_1..T_5 is a pseudo-co-decomposition into distal groups but not multi",
         "multi=Fails pseudo_multi=Holds strong_pseudo=Holds generates=Holds parts distal=Holds", [] {
             return classification_outcome(
                 candidate( BSpace{}, ActionFamily::T(), t_parts( 1, 5 ), PartSchedule::all_t_n ),
                 TargetProperty::distal );
         } );

    // example:salam80
    add( "salam80.shift_apply", "example:salam80",
         "shift_sigma sends 1 -> 3, 2 -> 1, 5 -> 7, 6 -> 4; its inverse sends 3 -> 1", "3, 1, 7, 4, 1", [] {
             const auto s = build_shift_sigma();
             return Outcome{ join( { std::to_string( s.apply( 1 ) ), std::to_string( s.apply( 2 ) ),
                                     std::to_string( s.apply( 5 ) ), std::to_string( s.apply( 6 ) ),
                                     std::to_string( s.inverse().apply( 3 ) ) } ),
                             {} };
         } );
    add( "salam80.shift_orbit", "example:salam80", "the first 10 orbit points of 1 under powers of shift_sigma",
         "1, 1/3, 1/5, 1/7, 1/9, 1/11, 1/13, 1/15, 1/17, 1/19", [] {
             const auto o = orbit( BSpace{}, ActionFamily::generated( { build_shift_sigma() } ), BPoint::recip( 1 ), 9 );
             std::vector<std::string> pts;
             for ( std::size_t i = 0; i < o.points.size() && i < 10; ++i )
                 pts.push_back( render( o.points[ i ] ) );
             return Outcome{ join( pts ), o.complete ? "complete" : "incomplete" };
         } );
    add( "salam80.not_distal", "example:salam80", "powers of shift_sigma are not distal on B", "Fails", [] {
        return outcome( BSpace{},
                        is_distal( BSpace{}, ActionFamily::generated( { build_shift_sigma() } ), budgets() ) );
    } );
    add( "salam80.proximal_zero", "example:salam80", "a power of shift_sigma moves 1 below 1/100", "Holds(1/100)",
         [] {
             auto b = budgets();
             b.closure = std::min<std::size_t>( b.closure, 200 );
             return outcome( BSpace{}, proximal_witness_to_zero( ActionFamily::generated( { build_shift_sigma() } ),
                                                                 BPoint::recip( 1 ), Rational{ 1, 100 }, b ) );
         } );

    // Computable ingredients of the non-decomposability theorems.
    add( "salam60.growing_orbits", "theorem:salam60.ingredients",
         "the orbit of 1 under T_N has N points for N = 4, 6, 8", "4, 6, 8", [] {
             std::vector<std::string> sizes;
             for ( std::uint64_t n : { 4, 6, 8 } )
                 sizes.push_back( std::to_string(
                     orbit( BSpace{}, ActionFamily::T_n( n ), BPoint::recip( 1 ), budgets().orbit ).points.size() ) );
             return Outcome{ join( sizes ), {} };
         } );
    add( "salam60.t_not_distal", "theorem:salam60.ingredients", "(B, T) is not distal", "Fails",
         [] { return outcome( BSpace{}, is_distal( BSpace{}, ActionFamily::T(), budgets() ) ); } );
    add( "salam60.proximal_t", "theorem:salam60.ingredients", "a transposition in T moves 1 below 1/100",
         "Holds(1/100)", [] {
             return outcome( BSpace{}, proximal_witness_to_zero( ActionFamily::T(), BPoint::recip( 1 ),
                                                                 Rational{ 1, 100 }, budgets() ) );
         } );
    add( "taha60.finite_union", "theorem:taha60.ingredients",
         "finitely many dihedral_T parts generate a finite group, which has no 1/1000-dense orbit", "Fails(1/1000)", [] {
             std::vector<Element> gens;
             for ( std::uint64_t m : { 2, 3, 5 } )
                 for ( const auto& g : dihedral_T( m ) )
                     gens.emplace_back( g );
             const auto f = ActionFamily::generated( gens );
             const CircleRationalSpace circle;
             return outcome( circle, is_point_transitive( circle, f, Rational{ 1, 1000 }, {}, budgets() ) );
         } );

    // lemma:taha30, over all elements with angle denominator <= 12.
    add( "taha30.eta_phi", "lemma:taha30", "eta phi(a) = eps(a) = phi(-a) eta", "Holds", [] {
        for ( const auto& g : dihedral_up_to( 12 ) )
        {
            if ( g.flip() )
                continue;
            const auto a = g.angle();
            const auto e = DihedralElement::eps( a );
            if ( !( dihedral_compose( DihedralElement::eta(), g ) == e )
                 || !( dihedral_compose( DihedralElement::phi( -a ), DihedralElement::eta() ) == e ) )
                return Outcome{ "Fails", render_eta_phi( g ) };
        }
        return Outcome{ "Holds", {} };
    } );
    add( "taha30.involutions", "lemma:taha30", "h^2 = id exactly for the eps(a), id and phi(1/2)", "Holds", [] {
        for ( const auto& g : dihedral_up_to( 12 ) )
        {
            const bool involution = dihedral_compose( g, g ).is_identity();
            const bool predicted = g.flip() || g.angle() == Rational{ 0 } || g.angle() == Rational{ 1, 2 };
            if ( involution != predicted )
                return Outcome{ "Fails", render_eta_phi( g ) };
        }
        return Outcome{ "Holds", {} };
    } );
    add( "taha30.centralizer", "lemma:taha30", "the centralizer of eta is {eta, id, phi(1/2), eps(1/2)}", "4", [] {
        std::vector<std::string> found;
        for ( const auto& g : dihedral_up_to( 12 ) )
            if ( commutes_with_eta( g ) )
                found.push_back( render_eta_phi( g ) );
        return Outcome{ std::to_string( found.size() ), "{" + join( found ) + "}" };
    } );
    add( "taha30.order", "lemma:taha30", "g^order(g) = id and no smaller positive power is id", "Holds", [] {
        for ( const auto& g : dihedral_up_to( 12 ) )
        {
            const auto n = static_cast<std::int64_t>( dihedral_order( g ) );
            if ( !dihedral_power( g, n ).is_identity() )
                return Outcome{ "Fails", render_eta_phi( g ) };
            for ( std::int64_t k = 1; k < n; ++k )
                if ( dihedral_power( g, k ).is_identity() )
                    return Outcome{ "Fails", render_eta_phi( g ) };
        }
        return Outcome{ "Holds", {} };
    } );

    // example:taha40
    add( "taha40.products", "example:taha40", "T_s T_t = T_t T_s = T_lcm(s, t) for 1 <= s, t <= 12", "Holds", [] {
        for ( std::uint64_t s = 1; s <= 12; ++s )
            for ( std::uint64_t t = 1; t <= 12; ++t )
            {
                const auto st = dihedral_product( s, t );
                const auto lcm = dihedral_T( std::lcm( s, t ) );
                if ( st != dihedral_product( t, s ) || st != std::set<DihedralElement>( lcm.begin(), lcm.end() ) )
                    return Outcome{ "Fails", "s = " + std::to_string( s ) + ", t = " + std::to_string( t ) };
            }
        return Outcome{ "Holds", {} };
    } );
    add( "taha40.pseudo_multi", "example:taha40", "(circle, (dihedral_T(m) : m = 2..5)) is pseudo-multi", "Holds",
         [] {
             const auto c = candidate( CircleRationalSpace{}, ActionFamily::SigmaStar(), dihedral_parts( { 2, 3, 4, 5 } ) );
             return outcome( c.space, check_pseudo_multi( c ) );
         } );
    add( "taha40.classify", "example:taha40",
         "(circle, Sigma*) with parts dihedral_T(2..6) is a pseudo-co-decomposition into non point transitive groups",
         "multi=Fails pseudo_multi=Holds strong_pseudo=Holds generates=Holds parts non_point_transitive=Holds", [] {
             return classification_outcome( candidate( CircleRationalSpace{}, ActionFamily::SigmaStar(),
                                                       dihedral_parts( { 2, 3, 4, 5, 6 } ),
                                                       PartSchedule::all_dihedral_t ),
                                            TargetProperty::non_point_transitive );
         } );
    add( "taha40.not_point_transitive", "example:taha40",
         "dihedral_T(m) has no 1/(4m)-dense orbit for m = 1..10", "Fails", [] {
             const CircleRationalSpace circle;
             std::vector<std::string> arcs;
             for ( std::uint64_t m = 1; m <= 10; ++m )
             {
                 const auto v = is_point_transitive( circle, ActionFamily::DihedralT( m ),
                                                     Rational{ 1, static_cast<std::int64_t>( 4 * m ) }, {}, budgets() );
                 if ( !v.is_fails() )
                     return outcome( circle, v );
                 const auto& p = v.witness().points;
                 arcs.push_back( "m = " + std::to_string( m ) + ": (" + render( p[ 1 ] ) + ", " + render( p[ 2 ] ) + ")" );
             }
             return Outcome{ "Fails", "missed arcs " + join( arcs, "; " ) };
         } );

    // lemma:taha50
    const auto minimal_at_resolutions = []( ActionFamily f ) {
        const CircleRationalSpace circle;
        std::vector<std::string> labels;
        std::vector<std::string> witnesses;
        for ( std::int64_t d : { 10, 100, 1000 } )
        {
            const auto v = is_minimal( circle, f, Rational{ 1, d }, {}, budgets() );
            labels.push_back( label( v ) );
            witnesses.push_back( render_verdict_evidence( circle, v ) );
        }
        return Outcome{ join( labels ), join( witnesses, " | " ) };
    };
    add( "taha50.sigma_minimal", "lemma:taha50", "Sigma is eps-minimal at eps = 1/10, 1/100, 1/1000",
         "Holds(1/10), Holds(1/100), Holds(1/1000)",
         [ = ] { return minimal_at_resolutions( ActionFamily::Sigma() ); } );
    add( "taha50.sigma_star_minimal", "lemma:taha50", "Sigma* is eps-minimal at eps = 1/10, 1/100, 1/1000",
         "Holds(1/10), Holds(1/100), Holds(1/1000)",
         [ = ] { return minimal_at_resolutions( ActionFamily::SigmaStar() ); } );

    // remark:taha20
    add( "taha20.co_decomposition", "remark:taha20",
         "(circle, Sigma) with parts <phi(1/m)>, m = 2..5, is a co-decomposition into non-minimal groups",
         "multi=Holds pseudo_multi=Holds strong_pseudo=Holds generates=Holds parts non_minimal=Holds", [] {
             return classification_outcome( candidate( CircleRationalSpace{}, ActionFamily::Sigma(),
                                                       rotation_parts( { 2, 3, 4, 5 } ),
                                                       PartSchedule::all_cyclic_rotations ),
                                            TargetProperty::non_minimal );
         } );
    add( "taha20.generates_gap", "remark:taha20",
         "<phi(1/2)> and <phi(1/3)> alone do not generate Sigma", "Fails", [] {
             const auto c = candidate( CircleRationalSpace{}, ActionFamily::Sigma(), rotation_parts( { 2, 3 } ) );
             return outcome( c.space, check_generates( c ) );
         } );

    // The (S x S) u {e} construction with S = {id, swap} on two points.
    add( "m_construction.size", "construction:m", "|M| = 2 * 2 + 1", "5", [] {
        return Outcome{ std::to_string( two_point_m().monoid.as_enumerated()->elements.size() ), {} };
    } );
    add( "m_construction.operation", "construction:m", "(a, b) * (c, d) = (a, d) and x (s, t) = x s", "Holds", [] {
        const auto m = two_point_m();
        for ( const auto& p : m.monoid.as_enumerated()->elements )
            for ( const auto& q : m.monoid.as_enumerated()->elements )
            {
                const auto* a = std::get_if<PairElement>( &p );
                const auto* b = std::get_if<PairElement>( &q );
                if ( a == nullptr || b == nullptr )
                    continue;
                const auto pq = std::get<PairElement>( compose( p, q ) );
                if ( !( *pq.first == *a->first ) || !( *pq.second == *b->second ) )
                    return Outcome{ "Fails", render_witness_element( p ) + " * " + render_witness_element( q ) };
                for ( std::size_t x = 0; x < 2; ++x )
                    if ( !( codecomp::apply( p, FinitePoint{ x } ) == codecomp::apply( *a->first, FinitePoint{ x } ) ) )
                        return Outcome{ "Fails", render_witness_element( p ) };
            }
        return Outcome{ "Holds", {} };
    } );
    add( "m_construction.pseudo", "construction:m", "the parts (S x {t}) u {e} form a pseudo-multi structure", "Holds",
         [] {
             const auto c = m_candidate();
             return outcome( c.space, check_pseudo_multi( c ) );
         } );
    add( "m_construction.not_strong", "construction:m", "the parts do not satisfy S_a S_b = S_b S_a", "Fails", [] {
        const auto c = m_candidate();
        return outcome( c.space, check_strong_pseudo( c ) );
    } );
    add( "m_construction.not_effective", "construction:m", "M does not act effectively", "Fails", [] {
        const auto c = m_candidate();
        return outcome( c.space, acts_effectively( c.space, c.base, c.budgets ) );
    } );
    add( "m_construction.consequences", "construction:m",
         "the commutation consequences do not apply to the non-effective M", "Undecided", [] {
             const auto c = m_candidate();
             return outcome( c.space, check_effective_consequences( c ) );
         } );

    return r;
}

} // namespace

const std::vector<Scenario>& registry()
{
    static const auto r = make_registry();
    return r;
}

const std::vector<std::string>& required_anchors()
{
    static const std::vector<std::string> anchors{
        "convention:f_sigma",
        "convention:t_n",
        "convention:t",
        "definition:transformation_semigroup",
        "definition:effective_action",
        "definition:co_decomposition",
        "definition:pseudo_multi",
        "definition:strong_pseudo",
        "definition:proximal",
        "definition:distal",
        "definition:point_transitive",
        "definition:minimal",
        "definition:sigma_star",
        "example:salam10",
        "lemma:salam50",
        "lemma:salam20",
        "example:salam70",
        "example:salam80",
        "theorem:salam60.ingredients",
        "theorem:taha60.ingredients",
        "lemma:taha30",
        "example:taha40",
        "lemma:taha50",
        "remark:taha20",
        "construction:m",
    };
    return anchors;
}

namespace
{

ScenarioReport run_one( const Scenario& s )
{
    ScenarioReport r{ s.id, s.anchor, s.description, s.expected, {}, {}, false };
    try
    {
        auto out = s.run();
        r.actual = std::move( out.actual );
        r.witness = std::move( out.witness );
    }
    catch ( const std::exception& e )
    {
        r.actual = std::string{ "Error: " } + e.what();
    }
    r.pass = r.actual == r.expected;
    return r;
}

} // namespace

ScenarioReport reproduce( const std::string& id )
{
    for ( const auto& s : registry() )
        if ( s.id == id )
            return run_one( s );
    throw std::out_of_range( "unknown scenario id '" + id + "'" );
}

std::vector<ScenarioReport> reproduce_all( const std::string& prefix )
{
    std::vector<ScenarioReport> out;
    for ( const auto& s : registry() )
        if ( s.id.rfind( prefix, 0 ) == 0 )
            out.push_back( run_one( s ) );
    return out;
}

int reproduce_exit_code( const std::vector<ScenarioReport>& reports )
{
    if ( reports.empty() )
        return 1;
    bool undecided = false;
    for ( const auto& r : reports )
    {
        if ( r.pass )
            continue;
        if ( r.undecided() )
            undecided = true;
        else
            return 1;
    }
    return undecided ? 2 : 0;
}

} // namespace codecomp
