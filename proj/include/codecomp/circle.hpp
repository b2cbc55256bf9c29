#pragma once

#include "codecomp/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codecomp
{

// The point e^{2 pi i q} of the unit circle, q a reduced rational in [0, 1).
class CirclePoint
{
    Rational _q;

public:
    CirclePoint() : _q{ 0 } {}
    explicit CirclePoint( const Rational& q ) : _q{ mod_one( q ) } {}

    [[nodiscard]] const Rational& turns() const { return _q; }

    friend bool operator==( const CirclePoint& a, const CirclePoint& b ) { return a._q == b._q; }
    friend bool operator<( const CirclePoint& a, const CirclePoint& b ) { return a._q < b._q; }
};

// Arc distance in full turns: min(|q - q'|, 1 - |q - q'|), at most 1/2.
Rational arc_distance( const CirclePoint& a, const CirclePoint& b );

std::string to_string( const CirclePoint& x );
CirclePoint parse_circle_point( std::string_view text );

// eta^flip followed by the rotation through `angle` full turns, acting on the
// right: x -> (-1)^flip x + angle (mod 1).
class DihedralElement
{
    bool _flip = false;
    Rational _angle{ 0 };

public:
    DihedralElement() = default;
    DihedralElement( bool flip, const Rational& angle ) : _flip{ flip }, _angle{ mod_one( angle ) } {}

    static DihedralElement identity() { return {}; }
    static DihedralElement eta() { return { true, Rational{ 0 } }; }
    static DihedralElement phi( const Rational& angle ) { return { false, angle }; }
    static DihedralElement eps( const Rational& angle ) { return { true, angle }; }

    [[nodiscard]] bool flip() const { return _flip; }
    [[nodiscard]] const Rational& angle() const { return _angle; }
    [[nodiscard]] bool is_identity() const { return !_flip && _angle == Rational{ 0 }; }

    [[nodiscard]] CirclePoint apply( const CirclePoint& x ) const;
    [[nodiscard]] DihedralElement inverse() const;

    friend bool operator==( const DihedralElement& a, const DihedralElement& b )
    {
        return a._flip == b._flip && a._angle == b._angle;
    }
    friend bool operator<( const DihedralElement& a, const DihedralElement& b )
    {
        if ( a._flip != b._flip )
            return !a._flip;
        return a._angle < b._angle;
    }
};

inline CirclePoint circle_apply( const DihedralElement& g, const CirclePoint& x ) { return g.apply( x ); }

// Right-action product: circle_apply(dihedral_compose(g, h), x)
// == circle_apply(h, circle_apply(g, x)).
DihedralElement dihedral_compose( const DihedralElement& g, const DihedralElement& h );
DihedralElement dihedral_power( const DihedralElement& g, std::int64_t n );

// 2 for reflections, the angle's denominator for rotations.
std::uint64_t dihedral_order( const DihedralElement& g );

// {eta^i phi(n/m) : 0 <= n < m, i = 0, 1}, rotations first. Precondition m >= 1.
std::vector<DihedralElement> dihedral_T( std::uint64_t m );

bool commutes_with_eta( const DihedralElement& g );

// "id", "eta", "phi(a/b)", "eps(a/b)".
std::string to_string( const DihedralElement& g );
// "eta^i phi(a/b)", the form used in witness reports.
std::string render_eta_phi( const DihedralElement& g );
// Accepts both textual forms above.
DihedralElement parse_dihedral( std::string_view text );

} // namespace codecomp
