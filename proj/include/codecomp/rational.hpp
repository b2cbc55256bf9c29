#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace codecomp
{

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of( const Rational& r )
{
    auto q = r.numerator() / r.denominator();
    if ( r.numerator() % r.denominator() != 0 && r.numerator() < 0 )
        --q;
    return q;
}

// Representative of r in [0, 1).
inline Rational mod_one( const Rational& r )
{
    return r - floor_of( r );
}

std::string to_string( const Rational& r );

// Accepts "a", "a/b", "-a/b". Throws ParseError on malformed input or b == 0.
Rational parse_rational( std::string_view text );

} // namespace codecomp
