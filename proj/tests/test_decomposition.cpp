#include "support.hpp"

#include "codecomp/scenarios.hpp"

#include "doctest.h"

using namespace codecomp;
using namespace testing;

namespace
{

DecompositionCandidate t_n_candidate( std::uint64_t max_n )
{
    std::vector<ActionFamily> parts;
    for ( std::uint64_t n = 1; n <= max_n; ++n )
        parts.push_back( ActionFamily::T_n( n ) );
    return { BSpace{}, ActionFamily::T_n( max_n ), std::move( parts ), Budgets{}, PartSchedule::none,
             Rational{ 1, 1000 }, {} };
}

DecompositionCandidate dihedral_candidate( std::vector<std::uint64_t> ms )
{
    std::vector<ActionFamily> parts;
    for ( auto m : ms )
        parts.push_back( ActionFamily::DihedralT( m ) );
    return { CircleRationalSpace{}, ActionFamily::SigmaStar(), std::move( parts ), Budgets{},
             PartSchedule::none, Rational{ 1, 1000 }, {} };
}

std::set<Element> elements_of( const ActionFamily& f )
{
    const auto en = enumerate( f, {} );
    REQUIRE( en.complete );
    return { en.elements.begin(), en.elements.end() };
}

std::set<Element> product( const std::set<Element>& a, const std::set<Element>& b )
{
    std::set<Element> out;
    for ( const auto& s : a )
        for ( const auto& t : b )
            out.insert( compose( s, t ) );
    return out;
}

Element perm( std::initializer_list<Index> c ) { return NatPermutation::cycle( c ); }

} // namespace

TEST_CASE( "T_n parts are not multi: the transposition witness" )
{
    const auto v = check_multi( t_n_candidate( 3 ) );
    REQUIRE( v.is_fails() );
    const auto& w = v.witness();
    REQUIRE( w.points.size() == 3 );
    CHECK( w.points[ 0 ] == Point{ BPoint::recip( 1 ) } );
    CHECK( w.points[ 1 ] == Point{ BPoint::recip( 2 ) } );
    CHECK( w.points[ 2 ] == Point{ BPoint::recip( 3 ) } );
    CHECK( w.elements[ 0 ] == perm( { 1, 2 } ) );
    CHECK( w.elements[ 1 ] == perm( { 1, 3 } ) );

    // The witness re-checks independently of the checker.
    const auto& s = w.elements[ 0 ];
    const auto& t = w.elements[ 1 ];
    const Point x = w.points[ 0 ];
    CHECK( codecomp::apply( t, codecomp::apply( s, x ) ) == w.points[ 1 ] );
    CHECK( codecomp::apply( s, codecomp::apply( t, x ) ) == w.points[ 2 ] );
    CHECK( codecomp::apply( compose( s, t ), x ) == w.points[ 1 ] );
}

TEST_CASE( "T_n parts are pseudo-multi and strong pseudo" )
{
    const auto c = t_n_candidate( 4 );
    CHECK( check_structure( c ).is_holds() );
    CHECK( check_pseudo_multi( c ).is_holds() );
    CHECK( check_strong_pseudo( c ).is_holds() );
    CHECK( check_generates( c ).is_holds() );

    for ( std::uint64_t n = 1; n <= 4; ++n )
        for ( std::uint64_t m = 1; m <= 4; ++m )
            CHECK( product( elements_of( ActionFamily::T_n( n ) ), elements_of( ActionFamily::T_n( m ) ) )
                   == elements_of( ActionFamily::T_n( std::max( n, m ) ) ) );
    CHECK( elements_of( ActionFamily::T_n( 4 ) ).size() == 24 );
}

TEST_CASE( "circle parts" )
{
    for ( std::uint64_t s = 1; s <= 12; ++s )
        for ( std::uint64_t t = 1; t <= 12; ++t )
        {
            const auto a = elements_of( ActionFamily::DihedralT( s ) );
            const auto b = elements_of( ActionFamily::DihedralT( t ) );
            const auto l = elements_of( ActionFamily::DihedralT( std::lcm( s, t ) ) );
            CHECK( product( a, b ) == l );
            CHECK( product( b, a ) == l );
        }

    const auto c = dihedral_candidate( { 2, 3, 4, 5 } );
    CHECK( check_pseudo_multi( c ).is_holds() );
    CHECK( check_strong_pseudo( c ).is_holds() );
    const auto multi = check_multi( c );
    REQUIRE( multi.is_fails() );
    const auto& w = multi.witness();
    CHECK( codecomp::apply( w.elements[ 1 ], codecomp::apply( w.elements[ 0 ], w.points[ 0 ] ) )
           != codecomp::apply( w.elements[ 0 ], codecomp::apply( w.elements[ 1 ], w.points[ 0 ] ) ) );
}

TEST_CASE( "rotation parts of Sigma" )
{
    std::vector<ActionFamily> parts;
    for ( std::int64_t m = 1; m <= 6; ++m )
        parts.push_back( ActionFamily::CyclicRotation( Rational{ 1, m } ) );
    DecompositionCandidate c{ CircleRationalSpace{}, ActionFamily::Sigma(), parts, Budgets{},
                              PartSchedule::all_cyclic_rotations, Rational{ 1, 1000 }, {} };
    CHECK( check_multi( c ).is_holds() );
    CHECK( check_generates( c ).is_holds() );

    c.schedule = PartSchedule::none;
    const auto g = check_generates( c );
    REQUIRE( g.is_fails() );
    CHECK( g.witness().elements.size() == 1 );

    const auto report = classify( c, TargetProperty::non_minimal );
    CHECK( report.multi.is_holds() );
    REQUIRE( report.property_per_part.size() == parts.size() );
    for ( const auto& p : report.property_per_part )
        CHECK( p.verdict.is_holds() );
}

TEST_CASE( "structure failures" )
{
    auto c = t_n_candidate( 3 );
    c.parts.push_back( ActionFamily::T_n( 2 ) );
    const auto dup = check_structure( c );
    REQUIRE( dup.is_fails() );
    CHECK( dup.witness().parts == std::vector<std::size_t>{ 1, 3 } );

    // Listed families always receive the identity, so {(1 2)} is T_2 again.
    auto d = t_n_candidate( 2 );
    d.parts.push_back( ActionFamily::enumerated( { perm( { 1, 2 } ) } ) );
    const auto same = check_structure( d );
    REQUIRE( same.is_fails() );
    CHECK( same.witness().parts == std::vector<std::size_t>{ 1, 2 } );

    auto e = t_n_candidate( 2 );
    e.parts.push_back( ActionFamily::T_n( 3 ) );
    const auto outside = check_structure( e );
    REQUIRE( outside.is_fails() );
    CHECK( outside.witness().elements.size() == 1 );
}

TEST_CASE( "implications between the structures on random candidates" )
{
    int multi_count = 0;
    int pseudo_count = 0;
    for ( int trial = 0; trial < 200; ++trial )
    {
        const auto r = random_candidate( 5, 3 );
        const auto multi = check_multi( r.candidate );
        const auto pseudo = check_pseudo_multi( r.candidate );
        const auto strong = check_strong_pseudo( r.candidate );
        REQUIRE_FALSE( multi.is_undecided() );
        REQUIRE_FALSE( pseudo.is_undecided() );
        REQUIRE_FALSE( strong.is_undecided() );
        if ( multi.is_holds() )
            CHECK( pseudo.is_holds() );
        if ( strong.is_holds() )
            CHECK( pseudo.is_holds() );
        CHECK( pseudo.is_holds() == brute_force_pseudo_multi( r ) );
        multi_count += multi.is_holds();
        pseudo_count += pseudo.is_holds();

        if ( multi.is_fails() )
        {
            const auto& w = multi.witness();
            const auto& s = w.elements[ 0 ];
            const auto& t = w.elements[ 1 ];
            CHECK( codecomp::apply( t, codecomp::apply( s, w.points[ 0 ] ) ) == w.points[ 1 ] );
            CHECK( codecomp::apply( s, codecomp::apply( t, w.points[ 0 ] ) ) == w.points[ 2 ] );
            CHECK( w.points[ 1 ] != w.points[ 2 ] );
        }
        if ( pseudo.is_fails() )
        {
            const auto& w = pseudo.witness();
            REQUIRE( w.point_sets.size() == 2 );
            CHECK( w.point_sets[ 0 ] != w.point_sets[ 1 ] );
        }
        if ( strong.is_fails() )
        {
            const auto& w = strong.witness();
            const auto& ab = w.element_sets[ 0 ];
            const auto& ba = w.element_sets[ 1 ];
            const bool in_ab = std::find( ab.begin(), ab.end(), w.elements[ 0 ] ) != ab.end();
            const bool in_ba = std::find( ba.begin(), ba.end(), w.elements[ 0 ] ) != ba.end();
            CHECK( in_ab != in_ba );
        }
    }
    // The generator mixes in commuting parts, so both outcomes occur.
    CHECK( multi_count > 0 );
    CHECK( pseudo_count > 0 );
    CHECK( pseudo_count < 200 );
}

TEST_CASE( "the M construction" )
{
    const Transformation id{ { 0, 1 } };
    const Transformation swap{ { 1, 0 } };
    const auto m = build_M_construction( { Element{ id }, Element{ swap } } );
    CHECK( elements_of( m.monoid ).size() == 5 );
    REQUIRE( m.parts.size() == 2 );

    DecompositionCandidate c{ finite_space( 2 ), m.monoid, m.parts, Budgets{}, PartSchedule::none,
                              Rational{ 1, 1000 }, {} };
    CHECK( check_structure( c ).is_holds() );
    CHECK( check_pseudo_multi( c ).is_holds() );
    CHECK( acts_effectively( c.space, m.monoid, {} ).is_fails() );

    // With the adjoined identity in every part, P_t P_u = (S x {t, u}) u {e}
    // from either side, so the product sets agree.
    CHECK( check_strong_pseudo( c ).is_holds() );
    const auto pt = elements_of( m.parts[ 0 ] );
    const auto pu = elements_of( m.parts[ 1 ] );
    CHECK( product( pt, pu ) == product( pu, pt ) );
    CHECK( product( pt, pu ).size() == 5 );

    // x (g h) = (x g) h fails: the pair action forgets its second factor.
    const Element a = PairElement::make( id, id );
    const Element b = PairElement::make( swap, id );
    const Point x = FinitePoint{ 0 };
    CHECK( codecomp::apply( compose( a, b ), x ) == Point{ FinitePoint{ 0 } } );
    CHECK( codecomp::apply( b, codecomp::apply( a, x ) ) == Point{ FinitePoint{ 1 } } );

    CHECK_THROWS_AS( build_M_construction( { Element{ id }, Element{ id } } ), std::invalid_argument );
}

TEST_CASE( "effective consequences" )
{
    // Rotations commute and the product of two cyclic groups is the group
    // they generate.
    std::vector<ActionFamily> parts{ ActionFamily::CyclicRotation( Rational{ 1, 2 } ),
                                     ActionFamily::CyclicRotation( Rational{ 1, 3 } ) };
    DecompositionCandidate c{ CircleRationalSpace{}, ActionFamily::Sigma(), parts, Budgets{}, PartSchedule::none,
                              Rational{ 1, 1000 }, {} };
    CHECK( check_effective_consequences( c ).is_holds() );

    // Non-multi candidates leave the hypothesis unmet.
    CHECK( check_effective_consequences( t_n_candidate( 3 ) ).is_undecided() );
}

TEST_CASE( "negate" )
{
    CHECK( negate( Verdict::holds() ).is_fails() );
    CHECK( negate( Verdict::fails( {} ) ).is_holds() );
    CHECK( negate( Verdict::undecided( "x" ) ).is_undecided() );
    CHECK( negate( Verdict::holds_at( Rational{ 1, 10 }, "", {}, false ) ).is_undecided() );
    CHECK( negate( Verdict::fails_at( Rational{ 1, 10 }, {}, "", true ) ).is_holds() );
}

TEST_CASE( "schedule and property names" )
{
    for ( auto s : { PartSchedule::none, PartSchedule::all_t_n, PartSchedule::all_dihedral_t,
                     PartSchedule::all_cyclic_rotations } )
        CHECK( parse_schedule( to_string( s ) ) == s );
    for ( auto p : { TargetProperty::none, TargetProperty::distal, TargetProperty::non_point_transitive,
                     TargetProperty::non_minimal } )
        CHECK( parse_property( to_string( p ) ) == p );
    CHECK_THROWS( parse_schedule( "sometimes" ) );
}
