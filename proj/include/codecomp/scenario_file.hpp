#pragma once

#include "codecomp/decomposition.hpp"
#include "codecomp/report.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace codecomp
{

inline constexpr int scenario_schema_version = 1;

// "B", "circle", "circle:24" (grid denominator), "finite:a,b,c".
Space parse_space( std::string_view text );
// B: "0", "1", "1/k"; circle: a rational in turns; finite: a point name or
// "#i".
Point parse_point( const Space& space, std::string_view text );
// B: permutation syntax; circle: dihedral syntax; finite: "[1 0 2]".
Element parse_element( const Space& space, std::string_view text );
// "T_n(3)" or "T_3", "T", "G", "Sigma", "SigmaStar", "DihedralT(5)",
// "CyclicRotation(1/4)", "gen:a;b", "enum:a;b".
ActionFamily parse_family( const Space& space, std::string_view text );

struct CheckRequest
{
    std::string check;
    std::string candidate; // decomposition checks
    std::string family;    // action checks
    std::vector<Point> points;
    std::optional<Rational> resolution;
    std::optional<std::size_t> budget;
};

struct ScenarioFile
{
    Space space = BSpace{};
    Budgets budgets;
    std::map<std::string, ActionFamily> families;
    std::vector<std::string> family_order;
    std::map<std::string, DecompositionCandidate> candidates;
    std::map<std::string, TargetProperty> properties;
    std::vector<CheckRequest> checks;
};

// Diagnostics name either a line and column (syntax) or a JSON pointer
// (structure). Throws ParseError.
ScenarioFile parse_scenario_file( std::string_view text, const Budgets& budgets );

// The decomposition checks and "classify" take a candidate; "orbit",
// "distal", "point_transitive", "minimal", "effective" and
// "proximal_to_zero" take a family.
RunReport run_scenario_file( const ScenarioFile& file, bool timing = false );

} // namespace codecomp
