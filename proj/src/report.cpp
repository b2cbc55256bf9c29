#include "codecomp/report.hpp"

#include <sstream>

namespace codecomp
{

namespace
{

constexpr std::size_t max_listed = 16;

template <class T, class F>
std::string render_list( const std::vector<T>& items, F&& f )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < items.size() && i < max_listed; ++i )
    {
        if ( i > 0 )
            out += ", ";
        out += f( items[ i ] );
    }
    if ( items.size() > max_listed )
        out += ", ... (" + std::to_string( items.size() ) + " total)";
    return out + "}";
}

} // namespace

std::string render_witness_element( const Element& g )
{
    if ( const auto* d = std::get_if<DihedralElement>( &g ) )
        return render_eta_phi( *d );
    if ( const auto* p = std::get_if<PairElement>( &g ) )
        return "<" + render_witness_element( *p->first ) + ", " + render_witness_element( *p->second ) + ">";
    return render( g );
}

std::string render_witness_point( const Space& space, const Point& x )
{
    return render( space, x );
}

std::string render_witness( const Space& space, const Witness& w )
{
    std::vector<std::string> pieces;
    if ( !w.summary.empty() )
        pieces.push_back( w.summary );
    const auto point = [ & ]( const Point& x ) { return render_witness_point( space, x ); };
    const auto element = []( const Element& g ) { return render_witness_element( g ); };
    if ( !w.points.empty() )
        pieces.push_back( "points " + render_list( w.points, point ) );
    if ( !w.elements.empty() )
        pieces.push_back( "elements " + render_list( w.elements, element ) );
    if ( !w.parts.empty() )
        pieces.push_back( "parts " + render_list( w.parts, []( std::size_t i ) { return std::to_string( i ); } ) );
    for ( const auto& s : w.point_sets )
        pieces.push_back( "set " + render_list( s, point ) );
    for ( const auto& s : w.element_sets )
        pieces.push_back( "set " + render_list( s, element ) );

    std::string out;
    for ( const auto& p : pieces )
        out += ( out.empty() ? "" : "; " ) + p;
    return out;
}

std::string render_verdict_evidence( const Space& space, const Verdict& v )
{
    if ( v.is_undecided() )
        return v.detail();
    auto out = render_witness( space, v.witness() );
    return out.empty() ? v.detail() : out;
}

Json to_json( const Space& space, const Verdict& v )
{
    Json j;
    j[ "verdict" ] = std::string{ to_string( v.kind() ) };
    if ( v.resolution() )
        j[ "resolution" ] = to_string( *v.resolution() );
    if ( !v.is_undecided() )
        j[ "exact" ] = v.exact();
    j[ "detail" ] = v.detail();
    j[ "witness" ] = render_verdict_evidence( space, v );

    const auto& w = v.witness();
    if ( w.empty() )
        return j;
    Json e = Json::object();
    const auto points = [ & ]( const std::vector<Point>& xs ) {
        Json a = Json::array();
        for ( const auto& x : xs )
            a.push_back( render_witness_point( space, x ) );
        return a;
    };
    const auto elements = []( const std::vector<Element>& gs ) {
        Json a = Json::array();
        for ( const auto& g : gs )
            a.push_back( render_witness_element( g ) );
        return a;
    };
    if ( !w.summary.empty() )
        e[ "summary" ] = w.summary;
    if ( !w.points.empty() )
        e[ "points" ] = points( w.points );
    if ( !w.elements.empty() )
        e[ "elements" ] = elements( w.elements );
    if ( !w.parts.empty() )
        e[ "parts" ] = w.parts;
    if ( !w.point_sets.empty() )
    {
        e[ "point_sets" ] = Json::array();
        for ( const auto& s : w.point_sets )
            e[ "point_sets" ].push_back( points( s ) );
    }
    if ( !w.element_sets.empty() )
    {
        e[ "element_sets" ] = Json::array();
        for ( const auto& s : w.element_sets )
            e[ "element_sets" ].push_back( elements( s ) );
    }
    j[ "evidence" ] = std::move( e );
    return j;
}

// ----------------------------------------------------------------------------

bool RunReport::all_decided() const
{
    for ( const auto& r : records )
    {
        if ( r.verdict.is_undecided() )
            return false;
        if ( r.extra.contains( "parts" ) )
            for ( const auto& p : r.extra[ "parts" ] )
                if ( p[ "verdict" ] == "Undecided" )
                    return false;
    }
    return true;
}

CheckRecord make_record( std::string name, std::string target, const Space& space, Verdict v )
{
    CheckRecord r;
    r.name = std::move( name );
    r.target = std::move( target );
    r.witness = render_verdict_evidence( space, v );
    r.verdict = std::move( v );
    return r;
}

std::string render_text( const RunReport& report )
{
    std::ostringstream out;
    for ( const auto& r : report.records )
    {
        out << r.name << " [" << r.target << "]: " << label( r.verdict );
        if ( r.elapsed_ms )
            out << " (" << *r.elapsed_ms << " ms)";
        out << "\n";
        if ( !r.witness.empty() )
        {
            const char* tag = r.verdict.is_undecided() ? "reason: " : r.verdict.is_holds() ? "evidence: " : "witness: ";
            out << "  " << tag << r.witness << "\n";
        }
        if ( r.extra.contains( "points" ) )
        {
            out << "  points:";
            for ( const auto& p : r.extra[ "points" ] )
                out << " " << p.get<std::string>();
            out << "\n  complete: " << ( r.extra[ "complete" ].get<bool>() ? "yes" : "no" ) << "\n";
            if ( r.extra.contains( "closed_form" ) )
                out << "  closed form: " << r.extra[ "closed_form" ].get<std::string>() << "\n";
        }
        if ( r.extra.contains( "parts" ) )
            for ( const auto& p : r.extra[ "parts" ] )
            {
                out << "  part " << p[ "part" ].get<std::size_t>() << " " << p[ "property" ].get<std::string>()
                    << ": " << p[ "label" ].get<std::string>() << "\n";
                if ( !p[ "witness" ].get<std::string>().empty() )
                    out << "    " << p[ "witness" ].get<std::string>() << "\n";
            }
        if ( r.extra.contains( "violations" ) )
            for ( const auto& v : r.extra[ "violations" ] )
                out << "  VIOLATION: " << v.get<std::string>() << "\n";
    }
    out << "status: " << ( report.all_decided() ? "decided" : "undecided" ) << "\n";
    return out.str();
}

Json to_json( const RunReport& report )
{
    Json j;
    j[ "space" ] = describe( report.space );
    j[ "checks" ] = Json::array();
    for ( const auto& r : report.records )
    {
        Json c;
        c[ "name" ] = r.name;
        c[ "target" ] = r.target;
        c[ "label" ] = label( r.verdict );
        c[ "result" ] = to_json( report.space, r.verdict );
        for ( const auto& [ key, value ] : r.extra.items() )
            c[ key ] = value;
        if ( r.elapsed_ms )
            c[ "elapsed_ms" ] = *r.elapsed_ms;
        j[ "checks" ].push_back( std::move( c ) );
    }
    j[ "status" ] = report.all_decided() ? "decided" : "undecided";
    return j;
}

std::string render_text( const std::vector<ScenarioReport>& reports )
{
    std::ostringstream out;
    std::size_t passed = 0;
    for ( const auto& r : reports )
    {
        passed += r.pass ? 1 : 0;
        out << ( r.pass ? "PASS " : "FAIL " ) << r.id << "  [" << r.anchor << "]\n";
        out << "  " << r.description << "\n";
        out << "  expected: " << r.expected << "\n";
        out << "  actual:   " << r.actual << "\n";
        if ( !r.witness.empty() )
            out << "  witness:  " << r.witness << "\n";
    }
    out << passed << "/" << reports.size() << " scenarios pass\n";
    return out.str();
}

Json to_json( const std::vector<ScenarioReport>& reports )
{
    Json j;
    j[ "scenarios" ] = Json::array();
    std::size_t passed = 0;
    for ( const auto& r : reports )
    {
        passed += r.pass ? 1 : 0;
        Json s;
        s[ "id" ] = r.id;
        s[ "anchor" ] = r.anchor;
        s[ "description" ] = r.description;
        s[ "expected" ] = r.expected;
        s[ "actual" ] = r.actual;
        s[ "witness" ] = r.witness;
        s[ "pass" ] = r.pass;
        j[ "scenarios" ].push_back( std::move( s ) );
    }
    j[ "passed" ] = passed;
    j[ "total" ] = reports.size();
    j[ "exit_code" ] = reproduce_exit_code( reports );
    return j;
}

} // namespace codecomp
