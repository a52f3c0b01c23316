#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trigon/error.hpp"

namespace trigon {

/// Closed interval [lo, hi] with outward rounding by relative inflation. Every
/// operation returns an enclosure of the pointwise image of its operands.
struct Interval {
    double lo = 0;
    double hi = 0;

    constexpr Interval() = default;
    constexpr Interval(double v) : lo(v), hi(v) {}  // NOLINT: implicit by design of the arithmetic
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    double width() const { return hi - lo; }
    double mid() const { return lo + 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_point() const { return lo == hi; }
};

namespace detail {

// Outward step of |x| * 2^-50 (at least 4 ulps) plus the smallest subnormal.
// It covers the half-ulp rounding of the basic operations and the few-ulp
// error of the libm transcendentals.
inline constexpr double kInflation = 0x1p-50;

inline double down(double x) {
    if (!std::isfinite(x)) return x;
    return x - (std::abs(x) * kInflation + std::numeric_limits<double>::denorm_min());
}

inline double up(double x) {
    if (!std::isfinite(x)) return x;
    return x + (std::abs(x) * kInflation + std::numeric_limits<double>::denorm_min());
}

inline Interval widen(double lo, double hi) { return {down(lo), up(hi)}; }

}  // namespace detail

inline Interval hull(const Interval& x, const Interval& y) {
    return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
}

/// Throws EmptyIntersection when x and [lo, hi] are disjoint.
inline Interval intersect(const Interval& x, double lo, double hi) {
    Interval r{std::max(x.lo, lo), std::min(x.hi, hi)};
    if (r.lo > r.hi) throw Error(ErrorCode::EmptyIntersection, "interval lies outside the admissible range");
    return r;
}

inline Interval operator-(const Interval& x) { return {-x.hi, -x.lo}; }

inline Interval operator+(const Interval& x, const Interval& y) {
    return detail::widen(x.lo + y.lo, x.hi + y.hi);
}

inline Interval operator-(const Interval& x, const Interval& y) {
    return detail::widen(x.lo - y.hi, x.hi - y.lo);
}

inline Interval operator*(const Interval& x, const Interval& y) {
    if (x.lo >= 0) {
        if (y.lo >= 0) return detail::widen(x.lo * y.lo, x.hi * y.hi);
        if (y.hi <= 0) return detail::widen(x.hi * y.lo, x.lo * y.hi);
        return detail::widen(x.hi * y.lo, x.hi * y.hi);
    }
    if (x.hi <= 0) {
        if (y.lo >= 0) return detail::widen(x.lo * y.hi, x.hi * y.lo);
        if (y.hi <= 0) return detail::widen(x.hi * y.hi, x.lo * y.lo);
        return detail::widen(x.lo * y.hi, x.lo * y.lo);
    }
    if (y.lo >= 0) return detail::widen(x.lo * y.hi, x.hi * y.hi);
    if (y.hi <= 0) return detail::widen(x.hi * y.lo, x.lo * y.lo);
    const double p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    return detail::widen(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

inline Interval reciprocal(const Interval& x) {
    if (x.contains_zero())
        throw Error(ErrorCode::DivisionByZeroInterval, "reciprocal of an interval containing zero");
    return detail::widen(1.0 / x.hi, 1.0 / x.lo);
}

inline Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero())
        throw Error(ErrorCode::DivisionByZeroInterval, "division by an interval containing zero");
    const double q1 = x.lo / y.lo, q2 = x.lo / y.hi, q3 = x.hi / y.lo, q4 = x.hi / y.hi;
    return detail::widen(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

inline Interval& operator+=(Interval& x, const Interval& y) { return x = x + y; }
inline Interval& operator-=(Interval& x, const Interval& y) { return x = x - y; }
inline Interval& operator*=(Interval& x, const Interval& y) { return x = x * y; }

/// Tight square: never negative, unlike x * x on an interval straddling zero.
inline Interval sqr(const Interval& x) {
    const double l2 = x.lo * x.lo, h2 = x.hi * x.hi;
    if (x.contains_zero()) return {0.0, detail::up(std::max(l2, h2))};
    return {std::max(0.0, detail::down(std::min(l2, h2))), detail::up(std::max(l2, h2))};
}

inline Interval sqrt(const Interval& x) {
    if (x.hi < 0) throw Error(ErrorCode::DomainError, "square root of a negative interval");
    return {std::max(0.0, detail::down(std::sqrt(std::max(0.0, x.lo)))), detail::up(std::sqrt(x.hi))};
}

namespace detail {

/// True when some point phase + k*period (k integer) may lie in [lo, hi].
/// The slack absorbs the representation error of pi, so the test errs
/// toward reporting an extremum.
inline bool may_contain_phase(double lo, double hi, double phase, double period) {
    const double slack = 4 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(lo), std::abs(hi)});
    const double k = std::ceil((lo - slack - phase) / period);
    return phase + k * period <= hi + slack;
}

inline Interval periodic_enclosure(double flo, double fhi, double lo, double hi, double max_phase,
                                   double min_phase) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double rlo = std::min(flo, fhi), rhi = std::max(flo, fhi);
    if (hi - lo >= two_pi) return {-1.0, 1.0};
    if (may_contain_phase(lo, hi, max_phase, two_pi)) rhi = 1.0;
    if (may_contain_phase(lo, hi, min_phase, two_pi)) rlo = -1.0;
    return {std::max(-1.0, down(rlo)), std::min(1.0, up(rhi))};
}

}  // namespace detail

inline Interval sin(const Interval& x) {
    if (x.lo == 0 && x.hi == 0) return {0.0, 0.0};
    constexpr double half_pi = std::numbers::pi / 2;
    return detail::periodic_enclosure(std::sin(x.lo), std::sin(x.hi), x.lo, x.hi, half_pi, -half_pi);
}

inline Interval cos(const Interval& x) {
    return detail::periodic_enclosure(std::cos(x.lo), std::cos(x.hi), x.lo, x.hi, 0.0, std::numbers::pi);
}

inline Interval sinh(const Interval& x) {
    if (x.lo == 0 && x.hi == 0) return {0.0, 0.0};
    return detail::widen(std::sinh(x.lo), std::sinh(x.hi));
}

inline Interval cosh(const Interval& x) {
    const double cl = std::cosh(x.lo), ch = std::cosh(x.hi);
    if (x.contains_zero()) return {1.0, detail::up(std::max(cl, ch))};
    return {std::max(1.0, detail::down(std::min(cl, ch))), detail::up(std::max(cl, ch))};
}

enum class Transcendental { Sin, Sinh };

/// Checked entry point: sin accepts only arguments inside [0, 2 pi], the
/// range produced by valid side lengths. Throws DomainError otherwise.
Interval interval_transcendental(Transcendental fn, const Interval& x);

}  // namespace trigon
