#pragma once

#include "codecomp/element.hpp"
#include "codecomp/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codecomp
{

// Structured evidence attached to a verdict. Each decider documents which
// slots it fills; `summary` is a one-line human rendering.
struct Witness
{
    std::string summary;
    std::vector<Point> points;
    std::vector<Element> elements;
    std::vector<std::size_t> parts;
    std::vector<std::vector<Point>> point_sets;
    std::vector<std::vector<Element>> element_sets;

    [[nodiscard]] bool empty() const
    {
        return summary.empty() && points.empty() && elements.empty() && parts.empty() && point_sets.empty()
               && element_sets.empty();
    }
};

class Verdict
{
public:
    enum class Kind { holds, fails, undecided };

private:
    Kind _kind = Kind::undecided;
    Witness _witness;
    std::string _detail;
    std::optional<Rational> _resolution;
    bool _exact = true;

public:
    static Verdict holds( std::string detail = {}, Witness evidence = {} );
    // Holds at finite resolution eps. `exact` marks that a closed-form fact
    // also certifies the unrestricted property.
    static Verdict holds_at( const Rational& eps, std::string detail, Witness evidence, bool exact = false );
    static Verdict fails( Witness witness, std::string detail = {} );
    static Verdict fails_at( const Rational& eps, Witness witness, std::string detail, bool exact );
    static Verdict undecided( std::string reason );

    [[nodiscard]] Kind kind() const { return _kind; }
    [[nodiscard]] bool is_holds() const { return _kind == Kind::holds; }
    [[nodiscard]] bool is_fails() const { return _kind == Kind::fails; }
    [[nodiscard]] bool is_undecided() const { return _kind == Kind::undecided; }
    [[nodiscard]] const Witness& witness() const { return _witness; }
    // Extra note for Holds/Fails; the reason for Undecided.
    [[nodiscard]] const std::string& detail() const { return _detail; }
    [[nodiscard]] const std::optional<Rational>& resolution() const { return _resolution; }
    // False when the verdict only speaks about resolution eps or a sample.
    [[nodiscard]] bool exact() const { return _exact; }
};

std::string_view to_string( Verdict::Kind kind );
// "Holds", "Holds(1/100)", "Fails", "Undecided".
std::string label( const Verdict& v );

struct Budgets
{
    std::size_t closure = 100'000;
    std::size_t orbit = 10'000;
    std::size_t pairs = 1'000'000;

    // Reads CODECOMP_BUDGET: either one integer applied to every budget or a
    // comma list such as "closure=500,orbit=20". Throws ParseError.
    static Budgets from_env();
    static Budgets parse( std::string_view text, Budgets base );
    static Budgets parse( std::string_view text ) { return parse( text, Budgets{} ); }
};

} // namespace codecomp
