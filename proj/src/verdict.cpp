#include "codecomp/verdict.hpp"
#include "codecomp/error.hpp"

#include <charconv>
#include <cstdlib>

namespace codecomp
{

Verdict Verdict::holds( std::string detail, Witness evidence )
{
    Verdict v;
    v._kind = Kind::holds;
    v._detail = std::move( detail );
    v._witness = std::move( evidence );
    return v;
}

Verdict Verdict::holds_at( const Rational& eps, std::string detail, Witness evidence, bool exact )
{
    auto v = holds( std::move( detail ), std::move( evidence ) );
    v._resolution = eps;
    v._exact = exact;
    return v;
}

Verdict Verdict::fails( Witness witness, std::string detail )
{
    Verdict v;
    v._kind = Kind::fails;
    v._witness = std::move( witness );
    v._detail = std::move( detail );
    return v;
}

Verdict Verdict::fails_at( const Rational& eps, Witness witness, std::string detail, bool exact )
{
    auto v = fails( std::move( witness ), std::move( detail ) );
    v._resolution = eps;
    v._exact = exact;
    return v;
}

Verdict Verdict::undecided( std::string reason )
{
    Verdict v;
    v._kind = Kind::undecided;
    v._detail = std::move( reason );
    return v;
}

std::string_view to_string( Verdict::Kind kind )
{
    switch ( kind )
    {
    case Verdict::Kind::holds:
        return "Holds";
    case Verdict::Kind::fails:
        return "Fails";
    case Verdict::Kind::undecided:
        break;
    }
    return "Undecided";
}

std::string label( const Verdict& v )
{
    std::string out{ to_string( v.kind() ) };
    if ( v.resolution() && !v.is_undecided() )
        out += "(" + to_string( *v.resolution() ) + ")";
    return out;
}

namespace
{

std::size_t parse_positive( std::string_view text )
{
    std::size_t value = 0;
    auto [ ptr, ec ] = std::from_chars( text.data(), text.data() + text.size(), value );
    if ( ec != std::errc{} || ptr != text.data() + text.size() || value == 0 )
        throw ParseError( "budget must be a positive integer, got '" + std::string{ text } + "'" );
    return value;
}

} // namespace

Budgets Budgets::parse( std::string_view text, Budgets base )
{
    if ( text.find( '=' ) == std::string_view::npos )
    {
        const auto n = parse_positive( text );
        return { n, n, n };
    }
    auto out = base;
    while ( !text.empty() )
    {
        const auto comma = text.find( ',' );
        const auto item = text.substr( 0, comma );
        const auto eq = item.find( '=' );
        if ( eq == std::string_view::npos )
            throw ParseError( "expected key=value in budget spec, got '" + std::string{ item } + "'" );
        const auto key = item.substr( 0, eq );
        const auto value = parse_positive( item.substr( eq + 1 ) );
        if ( key == "closure" )
            out.closure = value;
        else if ( key == "orbit" )
            out.orbit = value;
        else if ( key == "pairs" )
            out.pairs = value;
        else
            throw ParseError( "unknown budget '" + std::string{ key } + "'" );
        if ( comma == std::string_view::npos )
            break;
        text.remove_prefix( comma + 1 );
    }
    return out;
}

Budgets Budgets::from_env()
{
    const char* env = std::getenv( "CODECOMP_BUDGET" );
    if ( env == nullptr || *env == '\0' )
        return {};
    return parse( env );
}

} // namespace codecomp
