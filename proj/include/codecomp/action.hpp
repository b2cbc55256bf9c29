#pragma once

#include "codecomp/element.hpp"
#include "codecomp/verdict.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace codecomp
{

// ----------------------------------------------------------------------------
// Spaces

// Discrete space on points 0..n-1; names are used only for rendering.
struct FiniteSpace
{
    std::vector<std::string> names;
    [[nodiscard]] std::size_t size() const { return names.size(); }
};

// {1/k : k >= 1} u {0} with the Euclidean topology.
struct BSpace
{
};

// The rational points of the unit circle. A grid denominator D selects the
// sample points k/D; 0 lets each decider pick a grid from the family.
struct CircleRationalSpace
{
    std::uint64_t grid_denominator = 0;
};

using Space = std::variant<FiniteSpace, BSpace, CircleRationalSpace>;

bool space_contains( const Space& space, const Point& x );
bool is_isolated( const Space& space, const Point& x );
std::string render( const Space& space, const Point& x );
std::string describe( const Space& space );

// ----------------------------------------------------------------------------
// Action families

enum class NamedKind
{
    t_n,             // permutations supported in {1..n}
    t_all,           // all finitary permutations
    g_all,           // all permutations of the positive integers
    sigma,           // rational rotations
    sigma_star,      // rational rotations and reflections
    dihedral_t,      // eta^i phi(k/m)
    cyclic_rotation, // powers of phi(q)
    custom,
};

struct NamedFamily
{
    NamedKind kind = NamedKind::custom;
    std::uint64_t n = 0;  // t_n, dihedral_t
    Rational q{ 0 };      // cyclic_rotation
    std::string custom_id;
};

struct Enumerated
{
    std::vector<Element> elements;
};

struct Generated
{
    std::vector<Element> generators;
    std::size_t budget = 0; // 0: use the caller's closure budget
};

class ActionFamily
{
    std::variant<Enumerated, Generated, NamedFamily> _value;

    explicit ActionFamily( std::variant<Enumerated, Generated, NamedFamily> v ) : _value{ std::move( v ) } {}

public:
    // Both insert the identity (of the first element's kind) when it is
    // missing. Throw std::invalid_argument on an empty list.
    static ActionFamily enumerated( std::vector<Element> elements );
    static ActionFamily generated( std::vector<Element> generators, std::size_t budget = 0 );
    static ActionFamily named( NamedFamily family );

    static ActionFamily T_n( std::uint64_t n ) { return named( { NamedKind::t_n, n, Rational{ 0 }, {} } ); }
    static ActionFamily T() { return named( { NamedKind::t_all, 0, Rational{ 0 }, {} } ); }
    static ActionFamily G() { return named( { NamedKind::g_all, 0, Rational{ 0 }, {} } ); }
    static ActionFamily Sigma() { return named( { NamedKind::sigma, 0, Rational{ 0 }, {} } ); }
    static ActionFamily SigmaStar() { return named( { NamedKind::sigma_star, 0, Rational{ 0 }, {} } ); }
    static ActionFamily DihedralT( std::uint64_t m ) { return named( { NamedKind::dihedral_t, m, Rational{ 0 }, {} } ); }
    static ActionFamily CyclicRotation( const Rational& q )
    {
        return named( { NamedKind::cyclic_rotation, 0, mod_one( q ), {} } );
    }

    [[nodiscard]] const auto& value() const { return _value; }
    [[nodiscard]] const NamedFamily* as_named() const { return std::get_if<NamedFamily>( &_value ); }
    [[nodiscard]] const Enumerated* as_enumerated() const { return std::get_if<Enumerated>( &_value ); }
    [[nodiscard]] const Generated* as_generated() const { return std::get_if<Generated>( &_value ); }

    [[nodiscard]] std::string label() const;
};

std::string label( const NamedFamily& family );
bool is_finite( const NamedFamily& family );
// Membership test; nullopt for custom families.
std::optional<bool> contains( const NamedFamily& family, const Element& g );
// The first `count` elements of a fixed enumeration of the family.
std::vector<Element> sample_prefix( const NamedFamily& family, std::size_t count );

struct EnumerationResult
{
    std::vector<Element> elements; // discovery order; a prefix when incomplete
    bool complete = true;
    std::string reason;
};

// Breadth-first closure of `generators` under composition (right
// multiplication by generators). Incomplete once more than `budget`
// elements have been found.
EnumerationResult closure( std::span<const Element> generators, std::size_t budget );

// The family's full element set, or a prefix flagged incomplete. Enumerated
// families are returned as listed.
EnumerationResult enumerate( const ActionFamily& family, const Budgets& budgets );

struct OrbitResult
{
    std::vector<Point> points; // discovery order
    bool complete = true;
    std::string closed_form;   // set for named families with a known orbit

    [[nodiscard]] bool contains( const Point& x ) const;
};

// `budget` bounds the number of points expanded by the breadth-first search.
OrbitResult orbit( const Space& space, const ActionFamily& family, const Point& x, std::size_t budget );

// ----------------------------------------------------------------------------
// Deciders

using IndexPair = std::pair<std::size_t, std::size_t>;

// {(x, y) : x t = y t for some t in the semigroup generated by `family`}.
// On a finite space with a finite family every net has a constant subnet, so
// attained coincidence is the proximal relation.
std::set<IndexPair> proximal_pairs( const FiniteSpace& space, std::span<const Element> family );
// A product t of family elements with x t = y t, if one exists.
std::optional<Element> coinciding_element( const FiniteSpace& space, std::span<const Element> family,
                                           std::size_t x, std::size_t y );

// BSpace: every orbit finite (hypothesis: the family consists of
// permutations, otherwise HypothesisError). FiniteSpace: proximal relation
// is the diagonal. Circle: dihedral elements are isometries, always distal.
Verdict is_distal( const Space& space, const ActionFamily& family, const Budgets& budgets );

// Searches the family for elements moving x = 1/k to some 1/j < eps. Holds
// carries the record-breaking sequence (elements) and its images (points).
Verdict proximal_witness_to_zero( const ActionFamily& family, BPoint x, const Rational& eps,
                                  const Budgets& budgets );

std::vector<Point> default_sample_points( const Space& space, const ActionFamily& family,
                                          const Budgets& budgets );

// On the circle an orbit is eps-dense when every circle point is at arc
// distance < eps from it, i.e. its largest cyclic gap is < 2 eps.
// Fails carries points {x, a, b} where (a, b) is an open arc of width
// >= 2 eps missed by the complete orbit of x (in point_sets[0]).
Verdict is_point_transitive( const Space& space, const ActionFamily& family, const Rational& eps,
                             std::span<const Point> sample_points, const Budgets& budgets );
Verdict is_minimal( const Space& space, const ActionFamily& family, const Rational& eps,
                    std::span<const Point> sample_points, const Budgets& budgets );

// Fails carries an unseparated pair in witness.elements.
Verdict acts_effectively( const Space& space, const ActionFamily& family, const Budgets& budgets );

struct ArcGap
{
    CirclePoint start;
    CirclePoint end;
    Rational width;
};

// Largest open arc between cyclically consecutive points. Precondition:
// non-empty, all CirclePoint.
ArcGap largest_gap( std::span<const Point> points );

// lcm of angle denominators of the dihedral elements among `elements`.
std::uint64_t angle_lcm( std::span<const Element> elements );

} // namespace codecomp
