// Command-line front end: reproduce the registered scenarios, check scenario
// files, print orbits.

#include "codecomp/error.hpp"
#include "codecomp/report.hpp"
#include "codecomp/scenario_file.hpp"
#include "codecomp/scenarios.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace codecomp;

namespace
{

constexpr int exit_usage = 3;

int cmd_reproduce( const std::string& filter, bool json )
{
    const auto reports = reproduce_all( filter );
    const int code = reproduce_exit_code( reports );
    if ( reports.empty() )
    {
        std::cerr << "no scenario id starts with '" << filter << "'\n";
        return code;
    }
    if ( json )
        std::cout << to_json( reports ).dump( 2 ) << "\n";
    else
        std::cout << render_text( reports );
    return code;
}

int cmd_check( const std::string& path, bool json, bool timing, const Budgets& budgets )
{
    std::ifstream in( path );
    if ( !in )
    {
        std::cerr << path << ": cannot open file\n";
        return exit_usage;
    }
    std::stringstream text;
    text << in.rdbuf();

    ScenarioFile file;
    try
    {
        file = parse_scenario_file( text.str(), budgets );
    }
    catch ( const ParseError& e )
    {
        std::cerr << path << ": " << e.what() << "\n";
        return exit_usage;
    }
    const auto report = run_scenario_file( file, timing );
    if ( json )
        std::cout << to_json( report ).dump( 2 ) << "\n";
    else
        std::cout << render_text( report );
    return report.all_decided() ? 0 : 2;
}

int cmd_orbit( const std::string& space_text, const std::string& family_text, const std::string& point_text,
               std::optional<std::size_t> budget, bool json, const Budgets& budgets )
{
    Space space;
    ActionFamily family = ActionFamily::T();
    Point point;
    try
    {
        space = parse_space( space_text );
        family = parse_family( space, family_text );
        point = parse_point( space, point_text );
    }
    catch ( const std::exception& e )
    {
        std::cerr << "orbit: " << e.what() << "\n";
        return exit_usage;
    }

    OrbitResult o;
    try
    {
        o = orbit( space, family, point, budget.value_or( budgets.orbit ) );
    }
    catch ( const std::exception& e )
    {
        std::cerr << "orbit: " << e.what() << "\n";
        return exit_usage;
    }

    if ( json )
    {
        Json j;
        j[ "space" ] = describe( space );
        j[ "family" ] = family.label();
        j[ "point" ] = render_witness_point( space, point );
        j[ "points" ] = Json::array();
        for ( const auto& x : o.points )
            j[ "points" ].push_back( render_witness_point( space, x ) );
        j[ "complete" ] = o.complete;
        if ( !o.closed_form.empty() )
            j[ "closed_form" ] = o.closed_form;
        std::cout << j.dump( 2 ) << "\n";
        return 0;
    }
    std::cout << "orbit of " << render_witness_point( space, point ) << " under " << family.label() << ":";
    for ( const auto& x : o.points )
        std::cout << " " << render_witness_point( space, x );
    std::cout << "\ncomplete: " << ( o.complete ? "yes" : "no" ) << "\n";
    if ( !o.closed_form.empty() )
        std::cout << "closed form: " << o.closed_form << "\n";
    return 0;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Exact checks for decompositions of transformation semigroups" };
    app.require_subcommand( 1 );

    auto* reproduce = app.add_subcommand( "reproduce", "run the registered scenarios" );
    std::string filter;
    bool reproduce_json = false;
    reproduce->add_option( "--filter", filter, "only scenarios whose id starts with this prefix" );
    reproduce->add_flag( "--json", reproduce_json, "machine-readable report" );

    auto* check = app.add_subcommand( "check", "run the checks declared in a scenario file" );
    std::string path;
    bool check_json = false;
    bool timing = false;
    check->add_option( "FILE", path, "scenario file (JSON)" )->required();
    check->add_flag( "--json", check_json, "machine-readable report" );
    check->add_flag( "--timing", timing, "add elapsed time per check" );

    auto* orbit_cmd = app.add_subcommand( "orbit", "print the orbit of a point" );
    std::string space_text;
    std::string family_text;
    std::string point_text;
    std::optional<std::size_t> budget;
    bool orbit_json = false;
    orbit_cmd->add_option( "--space", space_text, "B, circle, circle:D or finite:a,b,..." )->required();
    orbit_cmd->add_option( "--family", family_text, "e.g. T_n(3), T, G, DihedralT(4), gen:shift_sigma" )
        ->required();
    orbit_cmd->add_option( "--point", point_text, "e.g. 1, 1/3, 0" )->required();
    orbit_cmd->add_option( "--budget", budget, "number of points to expand" )->check( CLI::PositiveNumber );
    orbit_cmd->add_flag( "--json", orbit_json, "machine-readable output" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::ParseError& e )
    {
        app.exit( e );
        return exit_usage;
    }

    Budgets budgets;
    try
    {
        budgets = Budgets::from_env();
    }
    catch ( const ParseError& e )
    {
        std::cerr << "CODECOMP_BUDGET: " << e.what() << "\n";
        return exit_usage;
    }

    if ( *reproduce )
        return cmd_reproduce( filter, reproduce_json );
    if ( *check )
        return cmd_check( path, check_json, timing, budgets );
    return cmd_orbit( space_text, family_text, point_text, budget, orbit_json, budgets );
}
