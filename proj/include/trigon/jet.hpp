#pragma once

#include <array>
#include <cstddef>
#include <type_traits>

#include "trigon/interval.hpp"

namespace trigon {

/// Second-order forward-mode derivative over the three side lengths.
/// With T = Interval, the value, gradient and Hessian entries enclose their
/// exact counterparts over the whole input box.
template <class T>
struct Jet {
    T v{};
    std::array<T, 3> g{};
    std::array<T, 6> h{};  // upper triangle: 00 01 02 11 12 22

    Jet() = default;
    explicit Jet(double c) : v(c) {}

    static constexpr std::size_t hidx(std::size_t i, std::size_t j) {
        if (i > j) return hidx(j, i);
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }

    static Jet constant(const T& value) {
        Jet r;
        r.v = value;
        r.g = {T(0.0), T(0.0), T(0.0)};
        r.h = {T(0.0), T(0.0), T(0.0), T(0.0), T(0.0), T(0.0)};
        return r;
    }

    static Jet variable(const T& value, std::size_t index) {
        Jet r = constant(value);
        r.g[index] = T(1.0);
        return r;
    }

    const T& hess(std::size_t i, std::size_t j) const { return h[hidx(i, j)]; }
};

namespace detail {

/// Chain rule for y = f(u) given f(u), f'(u), f''(u).
template <class T>
Jet<T> compose(const Jet<T>& u, const T& f0, const T& f1, const T& f2) {
    Jet<T> r;
    r.v = f0;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = f1 * u.g[i];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            const auto k = Jet<T>::hidx(i, j);
            r.h[k] = f2 * (u.g[i] * u.g[j]) + f1 * u.h[k];
        }
    return r;
}

}  // namespace detail

template <class T>
Jet<T> operator+(const Jet<T>& x, const Jet<T>& y) {
    Jet<T> r;
    r.v = x.v + y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] + y.g[i];
    for (std::size_t k = 0; k < 6; ++k) r.h[k] = x.h[k] + y.h[k];
    return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& x) {
    Jet<T> r;
    r.v = -x.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = -x.g[i];
    for (std::size_t k = 0; k < 6; ++k) r.h[k] = -x.h[k];
    return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& x, const Jet<T>& y) {
    Jet<T> r;
    r.v = x.v - y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] - y.g[i];
    for (std::size_t k = 0; k < 6; ++k) r.h[k] = x.h[k] - y.h[k];
    return r;
}

template <class T>
Jet<T> operator*(const Jet<T>& x, const Jet<T>& y) {
    Jet<T> r;
    r.v = x.v * y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] * y.v + x.v * y.g[i];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            const auto k = Jet<T>::hidx(i, j);
            r.h[k] = x.h[k] * y.v + x.v * y.h[k] + x.g[i] * y.g[j] + x.g[j] * y.g[i];
        }
    return r;
}

template <class T>
Jet<T> operator*(double s, const Jet<T>& x) {
    Jet<T> r;
    const T c(s);
    r.v = c * x.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = c * x.g[i];
    for (std::size_t k = 0; k < 6; ++k) r.h[k] = c * x.h[k];
    return r;
}

template <class T>
Jet<T> operator*(const Jet<T>& x, double s) {
    return s * x;
}

template <class T>
Jet<T> reciprocal(const Jet<T>& x) {
    using trigon::reciprocal;
    const T inv = [&] {
        if constexpr (std::is_same_v<T, double>) return 1.0 / x.v;
        else return reciprocal(x.v);
    }();
    const T inv2 = inv * inv;
    return detail::compose(x, inv, -inv2, T(2.0) * inv2 * inv);
}

template <class T>
Jet<T> operator/(const Jet<T>& x, const Jet<T>& y) {
    return x * reciprocal(y);
}

template <class T>
Jet<T> operator/(const Jet<T>& x, double d) {
    Jet<T> r;
    const T inv = T(1.0) / T(d);
    r.v = x.v * inv;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] * inv;
    for (std::size_t k = 0; k < 6; ++k) r.h[k] = x.h[k] * inv;
    return r;
}

template <class T>
Jet<T> operator+(const Jet<T>& x, double s) {
    Jet<T> r = x;
    r.v = x.v + T(s);
    return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& x, double s) {
    return x + (-s);
}

template <class T>
Jet<T> operator-(double s, const Jet<T>& x) {
    return -x + s;
}

template <class T>
Jet<T> sin(const Jet<T>& x) {
    using std::cos;
    using std::sin;
    using trigon::cos;
    using trigon::sin;
    const T s = sin(x.v);
    return detail::compose(x, s, cos(x.v), -s);
}

template <class T>
Jet<T> sinh(const Jet<T>& x) {
    using std::cosh;
    using std::sinh;
    using trigon::cosh;
    using trigon::sinh;
    const T s = sinh(x.v);
    return detail::compose(x, s, cosh(x.v), s);
}

template <class T>
Jet<T> cos(const Jet<T>& x) {
    using std::cos;
    using std::sin;
    using trigon::cos;
    using trigon::sin;
    const T c = cos(x.v);
    return detail::compose(x, c, -sin(x.v), -c);
}

template <class T>
Jet<T> cosh(const Jet<T>& x) {
    using std::cosh;
    using std::sinh;
    using trigon::cosh;
    using trigon::sinh;
    const T c = cosh(x.v);
    return detail::compose(x, c, sinh(x.v), c);
}

/// First-order forward-mode derivative. Nested as Jet<Grad<Interval>> it
/// yields enclosures of third derivatives without carrying fourth ones.
template <class T>
struct Grad {
    T v{};
    std::array<T, 3> g{};

    Grad() = default;
    explicit Grad(double c) : v(c), g{T(0.0), T(0.0), T(0.0)} {}

    static Grad variable(const T& value, std::size_t index) {
        Grad r(0.0);
        r.v = value;
        r.g[index] = T(1.0);
        return r;
    }
};

namespace detail {

template <class T>
Grad<T> compose(const Grad<T>& u, const T& f0, const T& f1) {
    Grad<T> r;
    r.v = f0;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = f1 * u.g[i];
    return r;
}

}  // namespace detail

template <class T>
Grad<T> operator+(const Grad<T>& x, const Grad<T>& y) {
    Grad<T> r;
    r.v = x.v + y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] + y.g[i];
    return r;
}

template <class T>
Grad<T> operator-(const Grad<T>& x) {
    Grad<T> r;
    r.v = -x.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = -x.g[i];
    return r;
}

template <class T>
Grad<T> operator-(const Grad<T>& x, const Grad<T>& y) {
    Grad<T> r;
    r.v = x.v - y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] - y.g[i];
    return r;
}

template <class T>
Grad<T> operator*(const Grad<T>& x, const Grad<T>& y) {
    Grad<T> r;
    r.v = x.v * y.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = x.g[i] * y.v + x.v * y.g[i];
    return r;
}

template <class T>
Grad<T> operator*(double s, const Grad<T>& x) {
    Grad<T> r;
    const T c(s);
    r.v = c * x.v;
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = c * x.g[i];
    return r;
}

template <class T>
Grad<T> operator*(const Grad<T>& x, double s) {
    return s * x;
}

template <class T>
Grad<T> reciprocal(const Grad<T>& x) {
    using trigon::reciprocal;
    const T inv = [&] {
        if constexpr (std::is_same_v<T, double>) return 1.0 / x.v;
        else return reciprocal(x.v);
    }();
    return detail::compose(x, inv, -(inv * inv));
}

template <class T>
Grad<T> operator/(const Grad<T>& x, const Grad<T>& y) {
    return x * reciprocal(y);
}

template <class T>
Grad<T> operator/(const Grad<T>& x, double d) {
    return (1.0 / d) * x;
}

template <class T>
Grad<T> operator+(const Grad<T>& x, double s) {
    Grad<T> r = x;
    r.v = x.v + T(s);
    return r;
}

template <class T>
Grad<T> operator-(const Grad<T>& x, double s) {
    return x + (-s);
}

template <class T>
Grad<T> operator-(double s, const Grad<T>& x) {
    return -x + s;
}

template <class T>
Grad<T> sin(const Grad<T>& x) {
    using std::cos;
    using std::sin;
    using trigon::cos;
    using trigon::sin;
    return detail::compose(x, sin(x.v), cos(x.v));
}

template <class T>
Grad<T> cos(const Grad<T>& x) {
    using std::cos;
    using std::sin;
    using trigon::cos;
    using trigon::sin;
    return detail::compose(x, cos(x.v), -sin(x.v));
}

template <class T>
Grad<T> sinh(const Grad<T>& x) {
    using std::cosh;
    using std::sinh;
    using trigon::cosh;
    using trigon::sinh;
    return detail::compose(x, sinh(x.v), cosh(x.v));
}

template <class T>
Grad<T> cosh(const Grad<T>& x) {
    using std::cosh;
    using std::sinh;
    using trigon::cosh;
    using trigon::sinh;
    return detail::compose(x, cosh(x.v), sinh(x.v));
}

}  // namespace trigon
