#pragma once

#include "codecomp/circle.hpp"
#include "codecomp/perm.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace codecomp
{

// A self-map of the finite space {0, ..., n-1}, acting on the right.
struct Transformation
{
    std::vector<std::size_t> images;

    static Transformation identity( std::size_t n );

    [[nodiscard]] std::size_t size() const { return images.size(); }
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_bijective() const;

    bool operator==( const Transformation& ) const = default;
    auto operator<=>( const Transformation& ) const = default;
};

Transformation compose( const Transformation& f, const Transformation& g );

// The identity adjoined to S x S in the rectangular-band construction.
struct AdjoinedIdentity
{
    friend bool operator==( const AdjoinedIdentity&, const AdjoinedIdentity& ) { return true; }
    friend bool operator<( const AdjoinedIdentity&, const AdjoinedIdentity& ) { return false; }
};

struct PairElement;

// An acting element. Which points it acts on depends on the alternative:
// permutations on BPoint, dihedral elements on CirclePoint, transformations
// on FinitePoint; pairs act through their first coordinate and the adjoined
// identity acts trivially on everything.
using Element = std::variant<NatPermutation, DihedralElement, Transformation, PairElement, AdjoinedIdentity>;

// (a, b) with product (a, b) * (c, d) = (a, d) and action x (a, b) = x a.
struct PairElement
{
    std::shared_ptr<const Element> first;
    std::shared_ptr<const Element> second;

    static PairElement make( Element a, Element b );
};

bool operator==( const PairElement& a, const PairElement& b );
bool operator<( const PairElement& a, const PairElement& b );

struct FinitePoint
{
    std::size_t index;
    auto operator<=>( const FinitePoint& ) const = default;
};

using Point = std::variant<FinitePoint, BPoint, CirclePoint>;

// Throws std::invalid_argument when the element does not act on that kind of
// point, or a transformation is applied outside its domain.
Point apply( const Element& g, const Point& x );
// Right action: apply(compose(g, h), x) == apply(h, apply(g, x)) wherever
// the action law holds. Throws std::invalid_argument on mixed kinds.
Element compose( const Element& g, const Element& h );

bool is_identity( const Element& g );
// The identity of the same kind as g (size-matched for transformations).
Element identity_like( const Element& g );

std::string render( const Element& g );
std::string render( const Point& x );

} // namespace codecomp
