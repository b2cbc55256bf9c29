#include "codecomp/scenario_file.hpp"
#include "codecomp/error.hpp"
#include "codecomp/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <set>

namespace codecomp
{

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

std::vector<std::string_view> split( std::string_view s, char sep )
{
    std::vector<std::string_view> out;
    while ( true )
    {
        const auto at = s.find( sep );
        out.push_back( trim( s.substr( 0, at ) ) );
        if ( at == std::string_view::npos )
            return out;
        s.remove_prefix( at + 1 );
    }
}

std::uint64_t parse_count( std::string_view text, const char* what )
{
    text = trim( text );
    std::uint64_t v = 0;
    const auto [ ptr, ec ] = std::from_chars( text.data(), text.data() + text.size(), v );
    if ( ec != std::errc{} || ptr != text.data() + text.size() || v == 0 )
        throw ParseError( std::string{ what } + " must be a positive integer, got '" + std::string{ text } + "'" );
    return v;
}

Transformation parse_transformation( std::string_view text, std::size_t size )
{
    text = trim( text );
    if ( text.size() < 2 || text.front() != '[' || text.back() != ']' )
        throw ParseError( "expected a transformation like [1 0 2], got '" + std::string{ text } + "'" );
    Transformation t;
    std::string_view body = text.substr( 1, text.size() - 2 );
    while ( true )
    {
        body = trim( body );
        if ( body.empty() )
            break;
        std::size_t v = 0;
        const auto [ ptr, ec ] = std::from_chars( body.data(), body.data() + body.size(), v );
        if ( ec != std::errc{} )
            throw ParseError( "bad image in '" + std::string{ text } + "'" );
        t.images.push_back( v );
        body.remove_prefix( static_cast<std::size_t>( ptr - body.data() ) );
        if ( !body.empty() && body.front() == ',' )
            body.remove_prefix( 1 );
    }
    if ( t.size() != size )
        throw ParseError( "transformation '" + std::string{ text } + "' has " + std::to_string( t.size() )
                          + " images, the space has " + std::to_string( size ) + " points" );
    for ( auto v : t.images )
        if ( v >= size )
            throw ParseError( "transformation '" + std::string{ text } + "' leaves the space" );
    return t;
}

// "Name(arg)" -> arg, or nullopt when text is not of that shape.
std::optional<std::string_view> call_argument( std::string_view text, std::string_view name )
{
    if ( text.size() < name.size() + 2 || text.substr( 0, name.size() ) != name || text[ name.size() ] != '('
         || text.back() != ')' )
        return std::nullopt;
    return trim( text.substr( name.size() + 1, text.size() - name.size() - 2 ) );
}

} // namespace

Space parse_space( std::string_view text )
{
    text = trim( text );
    if ( text == "B" )
        return BSpace{};
    if ( text == "circle" )
        return CircleRationalSpace{};
    if ( text.rfind( "circle:", 0 ) == 0 )
        return CircleRationalSpace{ parse_count( text.substr( 7 ), "circle grid" ) };
    if ( text.rfind( "finite:", 0 ) == 0 )
    {
        FiniteSpace f;
        for ( auto name : split( text.substr( 7 ), ',' ) )
        {
            if ( name.empty() )
                throw ParseError( "empty point name in '" + std::string{ text } + "'" );
            f.names.emplace_back( name );
        }
        return f;
    }
    throw ParseError( "unknown space '" + std::string{ text } + "' (expected B, circle, circle:D or finite:a,b,...)" );
}

Point parse_point( const Space& space, std::string_view text )
{
    text = trim( text );
    if ( std::holds_alternative<BSpace>( space ) )
        return parse_bpoint( text );
    if ( std::holds_alternative<CircleRationalSpace>( space ) )
        return parse_circle_point( text );
    const auto& f = std::get<FiniteSpace>( space );
    for ( std::size_t i = 0; i < f.size(); ++i )
        if ( f.names[ i ] == text )
            return FinitePoint{ i };
    if ( !text.empty() && text.front() == '#' )
    {
        std::size_t i = 0;
        const auto [ ptr, ec ] = std::from_chars( text.data() + 1, text.data() + text.size(), i );
        if ( ec == std::errc{} && ptr == text.data() + text.size() && i < f.size() )
            return FinitePoint{ i };
    }
    throw ParseError( "unknown point '" + std::string{ text } + "'" );
}

Element parse_element( const Space& space, std::string_view text )
{
    if ( std::holds_alternative<BSpace>( space ) )
        return parse_permutation( text );
    if ( std::holds_alternative<CircleRationalSpace>( space ) )
        return parse_dihedral( text );
    return parse_transformation( text, std::get<FiniteSpace>( space ).size() );
}

ActionFamily parse_family( const Space& space, std::string_view text )
{
    text = trim( text );
    const auto elements = [ & ]( std::string_view list ) {
        std::vector<Element> out;
        for ( auto item : split( list, ';' ) )
            out.push_back( parse_element( space, item ) );
        return out;
    };
    if ( text.rfind( "gen:", 0 ) == 0 )
        return ActionFamily::generated( elements( text.substr( 4 ) ) );
    if ( text.rfind( "enum:", 0 ) == 0 )
        return ActionFamily::enumerated( elements( text.substr( 5 ) ) );
    if ( text == "T" )
        return ActionFamily::T();
    if ( text == "G" )
        return ActionFamily::G();
    if ( text == "Sigma" )
        return ActionFamily::Sigma();
    if ( text == "SigmaStar" )
        return ActionFamily::SigmaStar();
    if ( const auto n = call_argument( text, "T_n" ) )
        return ActionFamily::T_n( parse_count( *n, "n" ) );
    if ( text.rfind( "T_", 0 ) == 0 )
        return ActionFamily::T_n( parse_count( text.substr( 2 ), "n" ) );
    if ( const auto m = call_argument( text, "DihedralT" ) )
        return ActionFamily::DihedralT( parse_count( *m, "m" ) );
    if ( const auto q = call_argument( text, "CyclicRotation" ) )
        return ActionFamily::CyclicRotation( parse_rational( *q ) );
    throw ParseError( "unknown family '" + std::string{ text }
                      + "' (expected T_n(k), T, G, Sigma, SigmaStar, DihedralT(m), CyclicRotation(q), gen:..., enum:...)" );
}

// ----------------------------------------------------------------------------
// Scenario files

namespace
{

using Json = nlohmann::ordered_json;

class Reader
{
public:
    [[noreturn]] static void fail( const std::string& pointer, const std::string& message )
    {
        throw ParseError( ( pointer.empty() ? std::string{ "/" } : pointer ) + ": " + message );
    }

    static const Json& object( const Json& j, const std::string& ptr )
    {
        if ( !j.is_object() )
            fail( ptr, "expected an object" );
        return j;
    }

    static void only_keys( const Json& j, std::initializer_list<std::string_view> keys, const std::string& ptr )
    {
        for ( const auto& [ key, value ] : j.items() )
            if ( std::find( keys.begin(), keys.end(), key ) == keys.end() )
                fail( ptr + "/" + key, "unknown field" );
    }

    static const Json& field( const Json& j, const char* key, const std::string& ptr )
    {
        if ( !j.contains( key ) )
            fail( ptr + "/" + key, "missing required field" );
        return j.at( key );
    }

    static std::string string( const Json& j, const std::string& ptr )
    {
        if ( !j.is_string() )
            fail( ptr, "expected a string" );
        return j.get<std::string>();
    }

    static std::size_t positive( const Json& j, const std::string& ptr )
    {
        if ( !j.is_number_integer() || j.get<std::int64_t>() <= 0 )
            fail( ptr, "expected a positive integer" );
        return j.get<std::size_t>();
    }

    static std::vector<std::string> strings( const Json& j, const std::string& ptr )
    {
        if ( !j.is_array() )
            fail( ptr, "expected an array of strings" );
        std::vector<std::string> out;
        for ( std::size_t i = 0; i < j.size(); ++i )
            out.push_back( string( j[ i ], ptr + "/" + std::to_string( i ) ) );
        return out;
    }

    // Runs f, prefixing any parse error with the pointer.
    template <class F>
    static auto at( const std::string& ptr, F&& f ) -> decltype( f() )
    {
        try
        {
            return f();
        }
        catch ( const ParseError& e )
        {
            if ( std::string_view{ e.what() }.rfind( ptr, 0 ) == 0 )
                throw;
            fail( ptr, e.what() );
        }
        catch ( const std::invalid_argument& e )
        {
            fail( ptr, e.what() );
        }
    }
};

std::string line_column( std::string_view text, std::size_t byte )
{
    std::size_t line = 1;
    std::size_t column = 1;
    for ( std::size_t i = 0; i + 1 < byte && i < text.size(); ++i )
    {
        if ( text[ i ] == '\n' )
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return "line " + std::to_string( line ) + ", column " + std::to_string( column );
}

Space read_space( const Json& j )
{
    Reader::object( j, "/space" );
    Reader::only_keys( j, { "kind", "grid", "points" }, "/space" );
    const auto kind = Reader::string( Reader::field( j, "kind", "/space" ), "/space/kind" );
    if ( kind == "B" )
    {
        if ( j.contains( "grid" ) || j.contains( "points" ) )
            Reader::fail( "/space", "B takes no parameters" );
        return BSpace{};
    }
    if ( kind == "circle" )
    {
        if ( j.contains( "points" ) )
            Reader::fail( "/space/points", "circle takes no point list" );
        CircleRationalSpace c;
        if ( j.contains( "grid" ) )
            c.grid_denominator = Reader::positive( j[ "grid" ], "/space/grid" );
        return c;
    }
    if ( kind == "finite" )
    {
        if ( j.contains( "grid" ) )
            Reader::fail( "/space/grid", "finite spaces take no grid" );
        FiniteSpace f;
        f.names = Reader::strings( Reader::field( j, "points", "/space" ), "/space/points" );
        if ( f.names.empty() )
            Reader::fail( "/space/points", "a finite space needs at least one point" );
        std::set<std::string> seen;
        for ( std::size_t i = 0; i < f.size(); ++i )
            if ( !seen.insert( f.names[ i ] ).second )
                Reader::fail( "/space/points/" + std::to_string( i ), "duplicate point name" );
        return f;
    }
    Reader::fail( "/space/kind", "expected B, circle or finite" );
}

Budgets read_budgets( const Json& j, Budgets b )
{
    Reader::object( j, "/budgets" );
    Reader::only_keys( j, { "closure", "orbit", "pairs" }, "/budgets" );
    if ( j.contains( "closure" ) )
        b.closure = Reader::positive( j[ "closure" ], "/budgets/closure" );
    if ( j.contains( "orbit" ) )
        b.orbit = Reader::positive( j[ "orbit" ], "/budgets/orbit" );
    if ( j.contains( "pairs" ) )
        b.pairs = Reader::positive( j[ "pairs" ], "/budgets/pairs" );
    return b;
}

std::vector<Element> read_elements( const Space& space, const Json& j, const std::string& ptr )
{
    const auto texts = Reader::strings( j, ptr );
    if ( texts.empty() )
        Reader::fail( ptr, "expected at least one element" );
    std::vector<Element> out;
    for ( std::size_t i = 0; i < texts.size(); ++i )
        out.push_back( Reader::at( ptr + "/" + std::to_string( i ),
                                   [ & ] { return parse_element( space, texts[ i ] ); } ) );
    return out;
}

ActionFamily read_family( const Space& space, const Json& j, const std::string& ptr )
{
    Reader::object( j, ptr );
    const auto kind = Reader::string( Reader::field( j, "kind", ptr ), ptr + "/kind" );
    if ( kind == "named" )
    {
        Reader::only_keys( j, { "kind", "name", "n", "m", "q" }, ptr );
        const auto name = Reader::string( Reader::field( j, "name", ptr ), ptr + "/name" );
        if ( name == "T_n" )
            return ActionFamily::T_n( Reader::positive( Reader::field( j, "n", ptr ), ptr + "/n" ) );
        if ( name == "DihedralT" )
            return ActionFamily::DihedralT( Reader::positive( Reader::field( j, "m", ptr ), ptr + "/m" ) );
        if ( name == "CyclicRotation" )
        {
            const auto q = Reader::string( Reader::field( j, "q", ptr ), ptr + "/q" );
            return ActionFamily::CyclicRotation( Reader::at( ptr + "/q", [ & ] { return parse_rational( q ); } ) );
        }
        if ( j.contains( "n" ) || j.contains( "m" ) || j.contains( "q" ) )
            Reader::fail( ptr, name + " takes no parameters" );
        return Reader::at( ptr + "/name", [ & ] { return parse_family( space, name ); } );
    }
    if ( kind == "generated" )
    {
        Reader::only_keys( j, { "kind", "generators", "budget" }, ptr );
        auto gens = read_elements( space, Reader::field( j, "generators", ptr ), ptr + "/generators" );
        std::size_t budget = 0;
        if ( j.contains( "budget" ) )
            budget = Reader::positive( j[ "budget" ], ptr + "/budget" );
        return ActionFamily::generated( std::move( gens ), budget );
    }
    if ( kind == "enumerated" )
    {
        Reader::only_keys( j, { "kind", "elements" }, ptr );
        return ActionFamily::enumerated( read_elements( space, Reader::field( j, "elements", ptr ), ptr + "/elements" ) );
    }
    Reader::fail( ptr + "/kind", "expected named, generated or enumerated" );
}

std::vector<Point> read_points( const Space& space, const Json& j, const std::string& ptr )
{
    const auto texts = Reader::strings( j, ptr );
    std::vector<Point> out;
    for ( std::size_t i = 0; i < texts.size(); ++i )
        out.push_back(
            Reader::at( ptr + "/" + std::to_string( i ), [ & ] { return parse_point( space, texts[ i ] ); } ) );
    return out;
}

Rational read_resolution( const Json& j, const std::string& ptr )
{
    const auto text = Reader::string( j, ptr );
    const auto r = Reader::at( ptr, [ & ] { return parse_rational( text ); } );
    if ( r <= 0 )
        Reader::fail( ptr, "resolution must be positive" );
    return r;
}

const std::set<std::string_view> candidate_checks{ "structure",     "multi",     "pseudo_multi",
                                                   "strong_pseudo", "generates", "effective_consequences",
                                                   "classify" };
const std::set<std::string_view> family_checks{ "orbit",     "distal",    "point_transitive",
                                                "minimal",   "effective", "proximal_to_zero" };

} // namespace

ScenarioFile parse_scenario_file( std::string_view text, const Budgets& budgets )
{
    Json root;
    try
    {
        root = Json::parse( text.begin(), text.end() );
    }
    catch ( const nlohmann::json::parse_error& e )
    {
        std::string what = e.what();
        if ( const auto at = what.find( "syntax error" ); at != std::string::npos )
            what = what.substr( at );
        throw ParseError( line_column( text, e.byte ) + ": " + what );
    }

    Reader::object( root, "" );
    Reader::only_keys( root, { "$schema", "schema_version", "space", "budgets", "families", "candidates", "checks" },
                       "" );
    const auto& version = Reader::field( root, "schema_version", "" );
    if ( !version.is_number_integer() || version.get<std::int64_t>() != scenario_schema_version )
        Reader::fail( "/schema_version", "unsupported schema version (expected "
                                             + std::to_string( scenario_schema_version ) + ")" );

    ScenarioFile file;
    file.space = read_space( Reader::field( root, "space", "" ) );
    file.budgets = root.contains( "budgets" ) ? read_budgets( root[ "budgets" ], budgets ) : budgets;

    if ( root.contains( "families" ) )
    {
        const auto& fams = Reader::object( root[ "families" ], "/families" );
        for ( const auto& [ name, value ] : fams.items() )
        {
            file.families.emplace( name, read_family( file.space, value, "/families/" + name ) );
            file.family_order.push_back( name );
        }
    }

    const auto family_ref = [ & ]( const Json& j, const std::string& ptr ) {
        const auto name = Reader::string( j, ptr );
        if ( !file.families.contains( name ) )
            Reader::fail( ptr, "undeclared family '" + name + "'" );
        return name;
    };

    if ( root.contains( "candidates" ) )
    {
        const auto& cands = Reader::object( root[ "candidates" ], "/candidates" );
        for ( const auto& [ name, value ] : cands.items() )
        {
            const auto ptr = "/candidates/" + name;
            Reader::object( value, ptr );
            Reader::only_keys( value,
                               { "base", "parts", "m_construction", "property", "schedule", "resolution",
                                 "sample_points" },
                               ptr );
            DecompositionCandidate c{ file.space, ActionFamily::T(), {}, file.budgets, PartSchedule::none,
                                      Rational{ 1, 1000 }, {} };
            if ( value.contains( "m_construction" ) )
            {
                if ( value.contains( "base" ) || value.contains( "parts" ) )
                    Reader::fail( ptr, "m_construction replaces base and parts" );
                const auto s = read_elements( file.space, value[ "m_construction" ], ptr + "/m_construction" );
                auto m = Reader::at( ptr + "/m_construction", [ & ] { return build_M_construction( s ); } );
                c.base = std::move( m.monoid );
                c.parts = std::move( m.parts );
            }
            else
            {
                c.base = file.families.at( family_ref( Reader::field( value, "base", ptr ), ptr + "/base" ) );
                const auto& parts = Reader::field( value, "parts", ptr );
                if ( !parts.is_array() || parts.empty() )
                    Reader::fail( ptr + "/parts", "expected a non-empty array of family names" );
                for ( std::size_t i = 0; i < parts.size(); ++i )
                    c.parts.push_back(
                        file.families.at( family_ref( parts[ i ], ptr + "/parts/" + std::to_string( i ) ) ) );
            }
            if ( value.contains( "schedule" ) )
            {
                const auto s = Reader::string( value[ "schedule" ], ptr + "/schedule" );
                c.schedule = Reader::at( ptr + "/schedule", [ & ] { return parse_schedule( s ); } );
            }
            if ( value.contains( "resolution" ) )
                c.resolution = read_resolution( value[ "resolution" ], ptr + "/resolution" );
            if ( value.contains( "sample_points" ) )
                c.sample_points = read_points( file.space, value[ "sample_points" ], ptr + "/sample_points" );
            auto property = TargetProperty::none;
            if ( value.contains( "property" ) )
            {
                const auto p = Reader::string( value[ "property" ], ptr + "/property" );
                property = Reader::at( ptr + "/property", [ & ] { return parse_property( p ); } );
            }
            file.properties.emplace( name, property );
            file.candidates.emplace( name, std::move( c ) );
        }
    }

    const auto& checks = Reader::field( root, "checks", "" );
    if ( !checks.is_array() || checks.empty() )
        Reader::fail( "/checks", "expected a non-empty array" );
    for ( std::size_t i = 0; i < checks.size(); ++i )
    {
        const auto ptr = "/checks/" + std::to_string( i );
        const auto& j = Reader::object( checks[ i ], ptr );
        Reader::only_keys( j, { "check", "candidate", "family", "point", "points", "resolution", "budget" }, ptr );
        CheckRequest req;
        req.check = Reader::string( Reader::field( j, "check", ptr ), ptr + "/check" );
        if ( candidate_checks.contains( req.check ) )
        {
            for ( const auto* key : { "family", "point", "points", "resolution", "budget" } )
                if ( j.contains( key ) )
                    Reader::fail( ptr + "/" + key, "not used by check '" + req.check + "'" );
            req.candidate = Reader::string( Reader::field( j, "candidate", ptr ), ptr + "/candidate" );
            if ( !file.candidates.contains( req.candidate ) )
                Reader::fail( ptr + "/candidate", "undeclared candidate '" + req.candidate + "'" );
        }
        else if ( family_checks.contains( req.check ) )
        {
            if ( j.contains( "candidate" ) )
                Reader::fail( ptr + "/candidate", "not used by check '" + req.check + "'" );
            req.family = family_ref( Reader::field( j, "family", ptr ), ptr + "/family" );
            const bool needs_point = req.check == "orbit" || req.check == "proximal_to_zero";
            if ( j.contains( "point" ) )
            {
                if ( j.contains( "points" ) )
                    Reader::fail( ptr + "/points", "give either point or points" );
                const auto p = Reader::string( j[ "point" ], ptr + "/point" );
                req.points.push_back( Reader::at( ptr + "/point", [ & ] { return parse_point( file.space, p ); } ) );
            }
            else if ( j.contains( "points" ) )
            {
                if ( needs_point )
                    Reader::fail( ptr + "/points", "check '" + req.check + "' takes a single point" );
                req.points = read_points( file.space, j[ "points" ], ptr + "/points" );
            }
            if ( needs_point && req.points.empty() )
                Reader::fail( ptr + "/point", "missing required field" );
            if ( req.check == "proximal_to_zero" )
            {
                if ( !std::holds_alternative<BSpace>( file.space ) )
                    Reader::fail( ptr + "/check", "proximal_to_zero needs the space B" );
                if ( std::get<BPoint>( req.points.front() ).is_zero() )
                    Reader::fail( ptr + "/point", "point must differ from 0" );
            }
            if ( j.contains( "resolution" ) )
                req.resolution = read_resolution( j[ "resolution" ], ptr + "/resolution" );
            if ( j.contains( "budget" ) )
                req.budget = Reader::positive( j[ "budget" ], ptr + "/budget" );
        }
        else
            Reader::fail( ptr + "/check", "unknown check '" + req.check + "'" );
        file.checks.push_back( std::move( req ) );
    }
    return file;
}

// ----------------------------------------------------------------------------

namespace
{

Verdict guarded( const std::function<Verdict()>& f )
{
    try
    {
        return f();
    }
    catch ( const HypothesisError& e )
    {
        return Verdict::undecided( std::string{ "hypothesis unmet: " } + e.what() );
    }
    catch ( const std::invalid_argument& e )
    {
        return Verdict::undecided( std::string{ "not applicable: " } + e.what() );
    }
}

Json part_json( const Space& space, const PartProperty& p )
{
    Json j;
    j[ "part" ] = p.part;
    j[ "property" ] = std::string{ to_string( p.property ) };
    j[ "label" ] = label( p.verdict );
    j[ "witness" ] = render_verdict_evidence( space, p.verdict );
    return j;
}

} // namespace

RunReport run_scenario_file( const ScenarioFile& file, bool timing )
{
    RunReport report;
    report.space = file.space;

    for ( const auto& req : file.checks )
    {
        const auto start = std::chrono::steady_clock::now();
        const auto first = report.records.size();

        if ( !req.candidate.empty() )
        {
            const auto& c = file.candidates.at( req.candidate );
            const auto& name = req.candidate;
            if ( req.check == "classify" )
            {
                const auto property = file.properties.at( name );
                const auto r = classify( c, property );
                report.records.push_back( make_record( "structure", name, c.space, r.structure ) );
                report.records.push_back( make_record( "multi", name, c.space, r.multi ) );
                report.records.push_back( make_record( "pseudo_multi", name, c.space, r.pseudo_multi ) );
                report.records.push_back( make_record( "strong_pseudo", name, c.space, r.strong_pseudo ) );
                report.records.push_back( make_record( "generates", name, c.space, r.generates ) );
                if ( property != TargetProperty::none )
                {
                    // Holds when every part has the property, Fails on the first part without it.
                    auto overall = Verdict::holds( "every part is " + std::string{ to_string( property ) } );
                    Json parts = Json::array();
                    for ( const auto& p : r.property_per_part )
                    {
                        parts.push_back( part_json( c.space, p ) );
                        if ( overall.is_holds() && !p.verdict.is_holds() )
                        {
                            if ( p.verdict.is_fails() )
                            {
                                Witness w = p.verdict.witness();
                                w.parts = { p.part };
                                overall = Verdict::fails( std::move( w ), "part " + std::to_string( p.part ) );
                            }
                            else
                                overall = Verdict::undecided( "part " + std::to_string( p.part ) + ": "
                                                              + p.verdict.detail() );
                        }
                    }
                    auto rec = make_record( std::string{ to_string( property ) }, name, c.space, overall );
                    rec.extra[ "parts" ] = std::move( parts );
                    report.records.push_back( std::move( rec ) );
                }
                if ( !r.violations.empty() )
                    report.records.back().extra[ "violations" ] = r.violations;
            }
            else
            {
                Verdict v = Verdict::undecided( "" );
                if ( req.check == "structure" )
                    v = check_structure( c );
                else if ( req.check == "multi" )
                    v = check_multi( c );
                else if ( req.check == "pseudo_multi" )
                    v = check_pseudo_multi( c );
                else if ( req.check == "strong_pseudo" )
                    v = check_strong_pseudo( c );
                else if ( req.check == "generates" )
                    v = check_generates( c );
                else
                    v = check_effective_consequences( c );
                report.records.push_back( make_record( req.check, name, c.space, std::move( v ) ) );
            }
        }
        else
        {
            const auto& f = file.families.at( req.family );
            const auto& space = file.space;
            auto budgets = file.budgets;
            if ( req.budget )
                budgets.orbit = budgets.closure = *req.budget;
            const auto eps = req.resolution.value_or( Rational{ 1, 1000 } );

            if ( req.check == "orbit" )
            {
                Json extra;
                auto v = guarded( [ & ] {
                    const auto o = orbit( space, f, req.points.front(), budgets.orbit );
                    Json pts = Json::array();
                    for ( const auto& x : o.points )
                        pts.push_back( render_witness_point( space, x ) );
                    extra[ "points" ] = std::move( pts );
                    extra[ "complete" ] = o.complete;
                    if ( !o.closed_form.empty() )
                        extra[ "closed_form" ] = o.closed_form;
                    const auto summary = std::to_string( o.points.size() ) + " points";
                    if ( o.complete || !o.closed_form.empty() )
                        return Verdict::holds( summary + ( o.complete ? ", complete" : ", closed form " + o.closed_form ) );
                    return Verdict::undecided( "orbit budget exhausted after " + summary );
                } );
                auto rec = make_record( "orbit", req.family + " at " + render( space, req.points.front() ), space,
                                        std::move( v ) );
                if ( !extra.is_null() )
                    rec.extra = std::move( extra );
                report.records.push_back( std::move( rec ) );
            }
            else
            {
                Verdict v = guarded( [ & ] {
                    if ( req.check == "distal" )
                        return is_distal( space, f, budgets );
                    if ( req.check == "point_transitive" )
                        return is_point_transitive( space, f, eps, req.points, budgets );
                    if ( req.check == "minimal" )
                        return is_minimal( space, f, eps, req.points, budgets );
                    if ( req.check == "effective" )
                        return acts_effectively( space, f, budgets );
                    return proximal_witness_to_zero( f, std::get<BPoint>( req.points.front() ),
                                                     req.resolution.value_or( Rational{ 1, 100 } ), budgets );
                } );
                report.records.push_back( make_record( req.check, req.family, space, std::move( v ) ) );
            }
        }

        if ( timing )
        {
            const auto ms =
                std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
            report.records[ first ].elapsed_ms = ms;
        }
    }
    return report;
}

} // namespace codecomp
