#pragma once

#include "codecomp/decomposition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace codecomp
{

// ----------------------------------------------------------------------------
// Constructions

// All n! permutations supported in {1..n}, identity first. nullopt when n!
// exceeds the closure budget.
std::optional<ActionFamily> build_T_n( std::uint64_t n, const Budgets& budgets = {} );

// ... 6 -> 4 -> 2 -> 1 -> 3 -> 5 -> 7 -> ...
NatPermutation build_shift_sigma();

struct MConstruction
{
    ActionFamily monoid;             // (S x S) u {e}
    std::vector<ActionFamily> parts; // (S x {t}) u {e} for t in S
};

// `s` lists the elements of S (duplicates removed). Throws
// std::invalid_argument when S has fewer than two elements.
MConstruction build_M_construction( const std::vector<Element>& s );

// ----------------------------------------------------------------------------
// Registry

struct Outcome
{
    std::string actual;  // "Holds", "Fails", "Undecided", or a value
    std::string witness; // one-line rendering, empty when there is none
};

struct Scenario
{
    std::string id;
    std::string anchor;
    std::string description;
    std::string expected;
    std::function<Outcome()> run;
};

struct ScenarioReport
{
    std::string id;
    std::string anchor;
    std::string description;
    std::string expected;
    std::string actual;
    std::string witness;
    bool pass = false;

    [[nodiscard]] bool undecided() const { return actual.rfind( "Undecided", 0 ) == 0; }
};

// Scenarios read budgets from CODECOMP_BUDGET when they run.
const std::vector<Scenario>& registry();
// Every anchor the registry must cover.
const std::vector<std::string>& required_anchors();

// Throws std::out_of_range for an unknown id.
ScenarioReport reproduce( const std::string& id );
// Registry order; `prefix` filters by id prefix.
std::vector<ScenarioReport> reproduce_all( const std::string& prefix = {} );

// 0 all pass; 1 a decided mismatch or an empty run; 2 an unexpected
// Undecided and no decided mismatch.
int reproduce_exit_code( const std::vector<ScenarioReport>& reports );

} // namespace codecomp
