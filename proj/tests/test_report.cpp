#include "codecomp/error.hpp"
#include "codecomp/report.hpp"
#include "codecomp/scenario_file.hpp"

#include "doctest.h"

#include <fstream>
#include <sstream>

using namespace codecomp;

namespace
{

std::string slurp( const std::string& relative )
{
    std::ifstream in( std::string{ CODECOMP_SOURCE_DIR } + "/" + relative );
    REQUIRE( in );
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string parse_error_of( std::string_view text )
{
    try
    {
        parse_scenario_file( text, {} );
    }
    catch ( const ParseError& e )
    {
        return e.what();
    }
    return {};
}

const char* minimal = R"({
  "schema_version": 1,
  "space": { "kind": "B" },
  "families": { "T_3": { "kind": "named", "name": "T_n", "n": 3 } },
  "checks": [ { "check": "distal", "family": "T_3" } ]
})";

} // namespace

TEST_CASE( "string parsers" )
{
    CHECK( std::holds_alternative<BSpace>( parse_space( "B" ) ) );
    CHECK( std::get<CircleRationalSpace>( parse_space( "circle:12" ) ).grid_denominator == 12 );
    CHECK( std::get<FiniteSpace>( parse_space( "finite:a,b,c" ) ).size() == 3 );
    CHECK_THROWS( parse_space( "torus" ) );

    CHECK( parse_family( BSpace{}, "T_n(3)" ).label() == ActionFamily::T_n( 3 ).label() );
    CHECK( parse_family( BSpace{}, "T_3" ).label() == ActionFamily::T_n( 3 ).label() );
    CHECK( parse_family( CircleRationalSpace{}, "DihedralT(4)" ).label() == ActionFamily::DihedralT( 4 ).label() );
    CHECK( parse_family( BSpace{}, "gen:(1 2);(2 3)" ).as_generated() != nullptr );
    CHECK_THROWS( parse_family( BSpace{}, "Nope" ) );

    const auto f = parse_space( "finite:a,b" );
    CHECK( parse_point( f, "b" ) == Point{ FinitePoint{ 1 } } );
    CHECK( parse_element( f, "[1 0]" ) == Element{ Transformation{ { 1, 0 } } } );
    CHECK_THROWS( parse_element( f, "[2 0]" ) );
    CHECK( parse_point( BSpace{}, "1/5" ) == Point{ BPoint::recip( 5 ) } );
}

TEST_CASE( "budget specs" )
{
    const auto all = Budgets::parse( "7" );
    CHECK( all.closure == 7 );
    CHECK( all.orbit == 7 );
    CHECK( all.pairs == 7 );
    const auto some = Budgets::parse( "orbit=5,pairs=9" );
    CHECK( some.closure == Budgets{}.closure );
    CHECK( some.orbit == 5 );
    CHECK( some.pairs == 9 );
    CHECK_THROWS_AS( Budgets::parse( "0" ), ParseError );
    CHECK_THROWS_AS( Budgets::parse( "speed=3" ), ParseError );
    CHECK_THROWS_AS( Budgets::parse( "orbit=x" ), ParseError );
}

TEST_CASE( "parse errors point at the problem" )
{
    CHECK( parse_error_of( minimal ).empty() );
    CHECK( parse_error_of( "{\n  \"schema_version\": 1,\n  \"space\" {}\n}" ).rfind( "line 3, column", 0 ) == 0 );

    std::string text = minimal;
    text.replace( text.find( "\"distal\"" ), 8, "\"sideways\"" );
    CHECK( parse_error_of( text ).find( "/checks/0/check" ) != std::string::npos );

    text = minimal;
    text.replace( text.find( "\"n\": 3" ), 6, "\"n\": 0" );
    CHECK( parse_error_of( text ).find( "/families/T_3/n" ) != std::string::npos );

    text = minimal;
    text.replace( text.find( "\"family\": \"T_3\"" ), 15, "\"family\": \"T_9\"" );
    CHECK( parse_error_of( text ).find( "undeclared family" ) != std::string::npos );

    text = minimal;
    text.replace( text.find( "\"schema_version\": 1" ), 19, "\"schema_version\": 7" );
    CHECK( parse_error_of( text ).find( "/schema_version" ) != std::string::npos );

    CHECK( parse_error_of( slurp( "tests/data/invalid/unknown_field.json" ) ).find( "/checks/0/colour" )
           != std::string::npos );
    CHECK( parse_error_of( slurp( "tests/data/invalid/orbit_without_point.json" ) ).find( "/checks/0/point" )
           != std::string::npos );
}

TEST_CASE( "shipped scenario files parse and decide" )
{
    for ( const auto* name : { "transpositions", "circle", "m_construction", "shift" } )
    {
        const auto report = run_scenario_file( parse_scenario_file( slurp( std::string{ "scenarios/" } + name + ".json" ), {} ) );
        CHECK_MESSAGE( report.all_decided(), name );
    }
    const auto tiny = run_scenario_file( parse_scenario_file( slurp( "scenarios/tiny_budget.json" ), {} ) );
    CHECK_FALSE( tiny.all_decided() );
}

TEST_CASE( "JSON output round-trips byte for byte" )
{
    const auto report = run_scenario_file( parse_scenario_file( slurp( "scenarios/transpositions.json" ), {} ) );
    const auto first = to_json( report ).dump( 2 );
    const auto again = Json::parse( first ).dump( 2 );
    CHECK( first == again );
    CHECK( to_json( run_scenario_file( parse_scenario_file( slurp( "scenarios/transpositions.json" ), {} ) ) ).dump( 2 )
           == first );
}

TEST_CASE( "text and JSON reports agree" )
{
    const auto report = run_scenario_file( parse_scenario_file( slurp( "scenarios/circle.json" ), {} ) );
    const auto text = render_text( report );
    const auto j = to_json( report );
    REQUIRE( j[ "checks" ].size() == report.records.size() );
    std::size_t at = 0;
    for ( const auto& c : j[ "checks" ] )
    {
        const auto head = c[ "name" ].get<std::string>() + " [" + c[ "target" ].get<std::string>()
                          + "]: " + c[ "label" ].get<std::string>();
        const auto found = text.find( head, at );
        CHECK_MESSAGE( found != std::string::npos, head );
        if ( found != std::string::npos )
            at = found + head.size();
    }
    CHECK( j[ "status" ] == "decided" );
    CHECK( text.find( "status: decided" ) != std::string::npos );
}

TEST_CASE( "timing appears only on request" )
{
    const auto file = parse_scenario_file( minimal, {} );
    CHECK_FALSE( to_json( run_scenario_file( file ) )[ "checks" ][ 0 ].contains( "elapsed_ms" ) );
    CHECK( to_json( run_scenario_file( file, true ) )[ "checks" ][ 0 ].contains( "elapsed_ms" ) );
}

TEST_CASE( "verdict JSON" )
{
    Witness w;
    w.summary = "orbit misses an arc";
    w.points = { CirclePoint{ Rational{ 1, 4 } } };
    const auto j = to_json( CircleRationalSpace{}, Verdict::fails_at( Rational{ 1, 8 }, w, "not dense", true ) );
    CHECK( j[ "verdict" ] == "Fails" );
    CHECK( j[ "resolution" ] == "1/8" );
    CHECK( j[ "exact" ] == true );
    CHECK( j[ "evidence" ][ "points" ][ 0 ] == "1/4" );

    const auto u = to_json( BSpace{}, Verdict::undecided( "budget" ) );
    CHECK( u[ "verdict" ] == "Undecided" );
    CHECK_FALSE( u.contains( "exact" ) );
    CHECK_FALSE( u.contains( "evidence" ) );
}

TEST_CASE( "witness rendering" )
{
    CHECK( render_witness_element( DihedralElement::eps( Rational{ 1, 3 } ) ) == "eta^1 phi(1/3)" );
    CHECK( render_witness_element( NatPermutation::cycle( { 1, 2 } ) ) == "(1 2)" );
    CHECK( render_witness_point( BSpace{}, BPoint::recip( 3 ) ) == "1/3" );
    CHECK( render_witness_point( parse_space( "finite:a,b" ), FinitePoint{ 1 } ) == "b" );
}
