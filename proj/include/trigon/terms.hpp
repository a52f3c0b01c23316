#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "trigon/geometry.hpp"
#include "trigon/interval.hpp"
#include "trigon/jet.hpp"

namespace trigon {

/// Every quantity that appears as a term of some inequality chain. Each one
/// is invariant under cyclic relabelling of the sides and equals 2 on
/// equilateral triangles in all three geometries; the certifier's
/// second-order test relies on both facts.
enum class TermKind {
    EulerRatio,         // 2 s(a)s(b)s(c) / B
    CubicSum,           // (P + s(a)^3 + s(b)^3 + s(c)^3) / (2P), P = s(a)s(b)s(c)
    CyclicMinusOne,     // s(a)/s(b) + s(b)/s(c) + s(c)/s(a) - 1
    TwoThirdsCyclic,    // 2/3 (s(a)/s(b) + s(b)/s(c) + s(c)/s(a))
    HalfSymMinusOne,    // 1/2 (sum of the six ratios) - 1
    ThirdSym,           // 1/3 (sum of the six ratios)
    ProductOverFour,    // (a+b)(a+c)(b+c) / (4abc), raw sides
    UnifiedMiddle,      // 2 s((a+b)/2) s((a+c)/2) s((b+c)/2) / P
    Two,
};

namespace detail {

// Range restriction hooks. Point arithmetic trusts its validated input;
// interval arithmetic intersects with the admissible range so that boxes
// straddling the validity boundary still produce finite enclosures.
inline double restrict_range(double x, double, double) { return x; }
inline Interval restrict_range(const Interval& x, double lo, double hi) { return intersect(x, lo, hi); }
template <class T>
Grad<T> restrict_range(const Grad<T>& x, double lo, double hi) {
    Grad<T> r = x;
    r.v = restrict_range(x.v, lo, hi);
    return r;
}
template <class T>
Jet<T> restrict_range(const Jet<T>& x, double lo, double hi) {
    Jet<T> r = x;
    r.v = restrict_range(x.v, lo, hi);
    return r;
}

template <class T>
T s_map(GeometryKind kind, const T& x) {
    using std::sin;
    using std::sinh;
    switch (kind) {
        case GeometryKind::Euclidean: return 0.5 * x;
        case GeometryKind::Spherical: return sin(0.5 * x);
        case GeometryKind::Hyperbolic: return sinh(0.5 * x);
    }
    return 0.5 * x;
}

inline double side_upper(GeometryKind kind) {
    return kind == GeometryKind::Spherical ? std::numbers::pi - kDegeneracyMargin
                                           : std::numeric_limits<double>::infinity();
}

inline double excess_upper(GeometryKind kind) {
    return kind == GeometryKind::Spherical ? 2 * std::numbers::pi : std::numeric_limits<double>::infinity();
}

}  // namespace detail

/// Value of one term at sides (a, b, c). T is double, Interval or a Jet.
template <class T>
T term_value_generic(TermKind term, GeometryKind kind, T a, T b, T c) {
    using detail::restrict_range;
    using detail::s_map;
    const double side_hi = detail::side_upper(kind);
    a = restrict_range(a, kDegeneracyMargin, side_hi);
    b = restrict_range(b, kDegeneracyMargin, side_hi);
    c = restrict_range(c, kDegeneracyMargin, side_hi);

    if (term == TermKind::Two) return T(2.0);
    if (term == TermKind::ProductOverFour) return (a + b) * (a + c) * (b + c) / (4.0 * a * b * c);

    const T sa = s_map(kind, a), sb = s_map(kind, b), sc = s_map(kind, c);
    const T prod = sa * sb * sc;
    switch (term) {
        case TermKind::EulerRatio: {
            const double ex_hi = detail::excess_upper(kind);
            const T xa = restrict_range(b + c - a, kDegeneracyMargin, ex_hi);
            const T xb = restrict_range(a + c - b, kDegeneracyMargin, ex_hi);
            const T xc = restrict_range(a + b - c, kDegeneracyMargin, ex_hi);
            return 2.0 * prod / (s_map(kind, xa) * s_map(kind, xb) * s_map(kind, xc));
        }
        case TermKind::CubicSum:
            return (prod + sa * sa * sa + sb * sb * sb + sc * sc * sc) / (2.0 * prod);
        case TermKind::CyclicMinusOne: return sa / sb + sb / sc + sc / sa - 1.0;
        case TermKind::TwoThirdsCyclic: return (2.0 * (sa / sb + sb / sc + sc / sa)) / 3.0;
        case TermKind::HalfSymMinusOne:
            return (sa / sb + sb / sa + sa / sc + sc / sa + sb / sc + sc / sb) / 2.0 - 1.0;
        case TermKind::ThirdSym: return (sa / sb + sb / sa + sa / sc + sc / sa + sb / sc + sc / sb) / 3.0;
        case TermKind::UnifiedMiddle:
            return 2.0 * s_map(kind, 0.5 * (a + b)) * s_map(kind, 0.5 * (a + c)) * s_map(kind, 0.5 * (b + c)) /
                   prod;
        case TermKind::ProductOverFour:
        case TermKind::Two: break;
    }
    return T(2.0);
}

}  // namespace trigon
