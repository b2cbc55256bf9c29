#pragma once

#include "codecomp/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace codecomp
{

using Index = std::uint64_t;

// A point of the convergent-sequence space {1/k : k >= 1} u {0}.
class BPoint
{
    Index _k; // 0 encodes the accumulation point

    explicit constexpr BPoint( Index k ) : _k{ k } {}

public:
    static constexpr BPoint zero() { return BPoint{ 0 }; }
    static BPoint recip( Index k );

    [[nodiscard]] bool is_zero() const { return _k == 0; }
    [[nodiscard]] bool is_isolated() const { return _k != 0; }
    // Denominator k of 1/k. Precondition: !is_zero().
    [[nodiscard]] Index index() const;

    auto operator<=>( const BPoint& ) const = default;
};

std::string to_string( BPoint x );
BPoint parse_bpoint( std::string_view text );

struct PermOrder
{
    enum class Kind { finite, infinite, undecided };
    Kind kind = Kind::undecided;
    std::uint64_t value = 0;

    static PermOrder finite( std::uint64_t n ) { return { Kind::finite, n }; }
    static PermOrder infinite() { return { Kind::infinite, 0 }; }
    static PermOrder undecided() { return { Kind::undecided, 0 }; }

    bool operator==( const PermOrder& ) const = default;
};

std::string to_string( const PermOrder& order );

struct Support
{
    bool unbounded = false;
    std::set<Index> points; // meaningful only when bounded

    static Support bounded( std::set<Index> pts ) { return { false, std::move( pts ) }; }
    static Support infinite() { return { true, {} }; }

    bool operator==( const Support& ) const = default;
};

// A permutation of the positive integers given by a total rule rather than by
// a finite move table. `power(k, n)` evaluates the n-th power (n may be
// negative) so that large powers stay cheap.
struct NamedRule
{
    std::string id;
    std::function<Index( Index, std::int64_t )> power;
    Support support;
    PermOrder order;
    // A point whose orbit under every non-zero power of the rule is infinite.
    std::optional<Index> escaping_point;
};

// Registered rules: "shift_sigma". Throws ParseError for an unknown id.
const NamedRule& named_rule( std::string_view id );

// A bijection of the positive integers acting on the right.
//
// Finitary values store only the points they move, so two finitary values are
// equal iff their move tables are. Values built from named rules are kept as
// a reduced word of factors (rule powers and finitary blocks); adjacent
// factors of the same kind are merged, so e.g. s * s^-1 collapses to the
// identity.
class NatPermutation
{
public:
    using Moves = std::map<Index, Index>;

    struct RulePower
    {
        const NamedRule* rule;
        std::int64_t exponent;
    };
    using Factor = std::variant<RulePower, Moves>;

private:
    Moves _moves;
    std::vector<Factor> _word; // non-empty iff the value is rule-defined

    NatPermutation() = default;

public:
    static NatPermutation identity() { return {}; }
    // Throws std::invalid_argument unless `moves` is a bijection of its key set.
    static NatPermutation finitary( Moves moves );
    static NatPermutation cycle( const std::vector<Index>& points );
    static NatPermutation named( std::string_view id );
    static NatPermutation from_word( std::vector<Factor> word );

    [[nodiscard]] bool is_finitary() const { return _word.empty(); }
    [[nodiscard]] bool is_identity() const { return _word.empty() && _moves.empty(); }
    [[nodiscard]] const Moves& moves() const { return _moves; }
    [[nodiscard]] const std::vector<Factor>& word() const { return _word; }

    [[nodiscard]] Index apply( Index k ) const;
    [[nodiscard]] BPoint apply( BPoint x ) const;
    [[nodiscard]] NatPermutation inverse() const;
    [[nodiscard]] PermOrder order() const;
    [[nodiscard]] Support support() const;
    // Largest moved point of a finitary value (0 for the identity).
    [[nodiscard]] Index max_support() const;
    [[nodiscard]] std::optional<Index> escaping_point() const;

    // Map equality. Rule-defined values that differ structurally are compared
    // on the finitary support plus the probe range 1..probe_limit.
    static constexpr Index probe_limit = 1024;
    friend bool operator==( const NatPermutation& a, const NatPermutation& b );

    // Structural order: finitary before rule-defined; finitary values by
    // (largest moved point, number of moved points, move table).
    friend bool operator<( const NatPermutation& a, const NatPermutation& b );
};

inline Index apply( const NatPermutation& p, Index k ) { return p.apply( k ); }
inline BPoint bpoint_apply( const NatPermutation& p, BPoint x ) { return p.apply( x ); }
// Right action: apply(compose(p, q), k) == apply(q, apply(p, k)).
NatPermutation compose( const NatPermutation& p, const NatPermutation& q );
inline NatPermutation invert( const NatPermutation& p ) { return p.inverse(); }
inline PermOrder order( const NatPermutation& p ) { return p.order(); }
inline Support support( const NatPermutation& p ) { return p.support(); }
NatPermutation power( const NatPermutation& p, std::int64_t n );

NatPermutation shift_sigma();

// Disjoint cycle notation with each cycle led by its least point, e.g.
// "(1 2)(3 4 5)"; the identity prints as "()". Rule words print as
// "shift_sigma^2*(1 2)".
std::string to_string( const NatPermutation& p );

// Accepts "id", "()", products of cycles "(1 2)(1 3)" (left factor acts
// first), rule ids with optional exponent "shift_sigma^-1", and '*'-joined
// products of those.
NatPermutation parse_permutation( std::string_view text );

// All n! permutations supported in {1..n}, in NatPermutation order.
std::vector<NatPermutation> all_permutations_of( Index n );

} // namespace codecomp
