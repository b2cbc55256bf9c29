#pragma once

#include <stdexcept>
#include <string>

namespace codecomp
{

// Malformed textual input (cycle notation, rationals, element names, files).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A decider was called outside the hypothesis it relies on, e.g. distality on
// the convergent-sequence space for a family that is not made of bijections.
class HypothesisError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace codecomp
