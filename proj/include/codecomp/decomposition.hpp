#pragma once

#include "codecomp/action.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codecomp
{

// How the listed parts continue when the base is an infinite named family:
// the candidate lists a finite truncation and the schedule names the rule
// that covers the rest of the base.
enum class PartSchedule
{
    none,
    all_t_n,              // T = union of T_n over n >= 1
    all_dihedral_t,       // Sigma* = union of dihedral_T(m) over m >= 2
    all_cyclic_rotations, // Sigma = union of <phi(1/m)> over m >= 1
};

enum class TargetProperty
{
    none,
    distal,
    non_point_transitive,
    non_minimal,
};

std::string_view to_string( PartSchedule schedule );
std::string_view to_string( TargetProperty property );
// Throw ParseError on an unknown name.
PartSchedule parse_schedule( std::string_view text );
TargetProperty parse_property( std::string_view text );

struct DecompositionCandidate
{
    Space space;
    ActionFamily base;
    std::vector<ActionFamily> parts;
    Budgets budgets;
    PartSchedule schedule = PartSchedule::none;
    // Used by the density properties in classify.
    Rational resolution{ 1, 1000 };
    std::vector<Point> sample_points;
};

// Parts pairwise distinct, identity in every part, parts inside the base.
// Undecided when a part cannot be enumerated or membership in the base is
// unknown.
Verdict check_structure( const DecompositionCandidate& candidate );

// Pairwise pointwise commutation x s t = x t s across distinct parts, over
// points that cover the space exactly (see coverage_points). Fails carries
// points {x, x s t, x t s}, elements {s, t}, parts {a, b}.
Verdict check_multi( const DecompositionCandidate& candidate );

// x S_a S_b = x S_b S_a as sets for every pair of parts. Fails carries
// points {x}, parts {a, b} and the two sets in point_sets.
Verdict check_pseudo_multi( const DecompositionCandidate& candidate );

// S_a S_b = S_b S_a as element sets. Fails carries elements {g} (in the
// first product only, or the second), parts {a, b}, and both products in
// element_sets.
Verdict check_strong_pseudo( const DecompositionCandidate& candidate );

// The union of the parts generates the base. Fails carries a base element
// outside the generated semigroup (or a part element outside the base).
Verdict check_generates( const DecompositionCandidate& candidate );

// When the base acts effectively and the candidate is multi, elements of
// distinct parts commute and <S_a u S_b> = S_a S_b. Undecided when the
// hypotheses are not met; Fails would contradict the lemma.
Verdict check_effective_consequences( const DecompositionCandidate& candidate );

// Points on which two maps from the parts must be compared: all points of a
// finite space; 0 and 1/k for k up to the largest moved point on B; the grid
// of multiples of 1/(4L) on the circle, L the lcm of angle denominators.
// nullopt when some element is not finitary.
std::optional<std::vector<Point>> coverage_points( const Space& space,
                                                   const std::vector<std::vector<Element>>& parts );

struct PartProperty
{
    std::size_t part;
    TargetProperty property;
    Verdict verdict;
};

struct ClassificationReport
{
    Verdict structure = Verdict::undecided( "not run" );
    Verdict multi = Verdict::undecided( "not run" );
    Verdict pseudo_multi = Verdict::undecided( "not run" );
    Verdict strong_pseudo = Verdict::undecided( "not run" );
    Verdict generates = Verdict::undecided( "not run" );
    std::vector<PartProperty> property_per_part;
    // Broken implications multi => pseudo_multi and strong => pseudo_multi.
    std::vector<std::string> violations;
};

// Negation used for the "non-" properties: a Fails becomes Holds, an exact
// Holds becomes Fails, and a Holds that only speaks about a resolution says
// nothing about the negation.
Verdict negate( const Verdict& v );

ClassificationReport classify( const DecompositionCandidate& candidate, TargetProperty property );

} // namespace codecomp
