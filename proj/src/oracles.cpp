#include "trigon/oracles.hpp"

#include <algorithm>
#include <functional>

namespace trigon {

Residual make_residual(double lhs, double rhs) {
    return {lhs, rhs, lhs - rhs, std::max({1.0, std::abs(lhs), std::abs(rhs)})};
}

TransferredTriple lemma1_transfer(const Triangle& t) {
    const auto k = t.kind();
    TransferredTriple out;
    out.sides = {s_value(k, t.a()), s_value(k, t.b()), s_value(k, t.c())};
    const auto& s = out.sides;
    out.is_euclidean_triangle = try_triangle(GeometryKind::Euclidean, s[0], s[1], s[2]).has_value();
    return out;
}

SignCheck lemma2_sign_check(const Triangle& t) {
    const double B = quantity_B(t);
    const double diff = B - quantity_Bbar(t);
    const double tol = 1e-12 * std::max(1.0, std::abs(B));
    bool conforms = false;
    switch (t.kind()) {
        case GeometryKind::Euclidean: conforms = std::abs(diff) <= tol; break;
        case GeometryKind::Hyperbolic: conforms = diff >= -tol; break;
        case GeometryKind::Spherical: conforms = diff <= tol; break;
    }
    return {diff, conforms};
}

double prop_sum_bound_sorted(GeometryKind kind, double a, double b, double c) {
    if (!(a >= b && b >= c)) throw Error(ErrorCode::UnsortedSides, "expected sides ordered a >= b >= c");
    return s_value(kind, b + c - a) - (s_value(kind, b) + s_value(kind, c) - s_value(kind, a));
}

double prop_sum_bound(const Triangle& t) {
    auto s = t.sides();
    std::sort(s.begin(), s.end(), std::greater<>());
    return prop_sum_bound_sorted(t.kind(), s[0], s[1], s[2]);
}

Residual prop_product_identity_residual(const Triangle& t) {
    const auto k = t.kind();
    if (k == GeometryKind::Euclidean)
        throw Error(ErrorCode::UnsupportedKind, "the product identity is stated for curved geometries");
    const double a = t.a(), b = t.b(), c = t.c();
    const double sa = s_value(k, a), sb = s_value(k, b), sc = s_value(k, c);
    const double excess_product = s_value(k, a + b - c) * s_value(k, a + c - b);
    const double image_product = (sa + sb - sc) * (sa + sc - sb);
    const double quarter = (b - c) / 4;
    if (k == GeometryKind::Hyperbolic) {
        const double sh = std::sinh(quarter);
        return make_residual(excess_product - image_product, 4 * sb * sc * sh * sh);
    }
    const double sn = std::sin(quarter);
    return make_residual(image_product - excess_product, 4 * sb * sc * sn * sn);
}

Residual sum_factorization_residual(GeometryKind kind, double a, double b, double c) {
    const double sa = s_value(kind, a), sb = s_value(kind, b), sc = s_value(kind, c);
    const double sp = s_value(kind, a + b + c);
    switch (kind) {
        case GeometryKind::Spherical:
            return make_residual(sa + sb + sc - sp,
                                 4 * std::sin((a + b) / 4) * std::sin((a + c) / 4) * std::sin((b + c) / 4));
        case GeometryKind::Hyperbolic:
            return make_residual(sp - sa - sb - sc,
                                 4 * std::sinh((a + b) / 4) * std::sinh((a + c) / 4) * std::sinh((b + c) / 4));
        case GeometryKind::Euclidean: break;
    }
    throw Error(ErrorCode::UnsupportedKind, "the sum factorization is stated for curved geometries");
}

RaviTriple ravi_decompose(double a, double b, double c) {
    const RaviTriple r{(b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2};
    if (!(r.x > 0 && r.y > 0 && r.z > 0))
        throw Error(ErrorCode::TriangleInequalityViolated, "Ravi substitution needs a strict triangle");
    return r;
}

Residual ravi_identity_residual(double x, double y, double z) {
    const double x2 = x * x, y2 = y * y, z2 = z * z;
    const double expanded = x2 * x * y2 + x2 * y2 * y - 2 * x2 * y2 * z + x2 * x * z2 - 2 * x2 * y * z2 -
                            2 * x * y2 * z2 + y2 * y * z2 + x2 * z2 * z + y2 * z2 * z;
    const double factored = x2 * (y + z) * (y - z) * (y - z) + y2 * (x + z) * (x - z) * (x - z) +
                            z2 * (x + y) * (x - y) * (x - y);
    // The expansion cancels monomials of size ~ max^5, so measure against that.
    Residual r = make_residual(expanded, factored);
    const double m = std::max({x, y, z});
    r.scale = std::max(r.scale, m * m * m * m * m);
    return r;
}

double schur_like_value(double x, double y, double z) {
    return x * x * y * y * (x - z) * (y - z) + y * y * z * z * (y - x) * (z - x) + x * x * z * z * (x - y) * (z - y);
}

double schur_like_scale(double x, double y, double z) {
    return std::max({1.0, std::abs(x * x * y * y * (x - z) * (y - z)) + std::abs(y * y * z * z * (y - x) * (z - x)) +
                              std::abs(x * x * z * z * (x - y) * (z - y))});
}

}  // namespace trigon
