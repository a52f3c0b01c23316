#pragma once

#include <array>

#include "trigon/geometry.hpp"

namespace trigon {

/// Both sides of a numeric identity together with its residual. The scale
/// is max(1, |lhs|, |rhs|) so that tolerances mean the same thing for tiny
/// and large triangles.
struct Residual {
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    double scale = 1;

    bool within(double tol_rel) const { return std::abs(residual) <= tol_rel * scale; }
};

Residual make_residual(double lhs, double rhs);

struct TransferredTriple {
    std::array<double, 3> sides{};  // (s(a), s(b), s(c))
    bool is_euclidean_triangle = false;
};

/// Images of the sides under s. For curved geometries these always form a
/// Euclidean triangle; the flag records whether validate_triangle agrees.
TransferredTriple lemma1_transfer(const Triangle& t);

struct SignCheck {
    double diff = 0;  // B - B_bar
    bool conforms = false;
};

/// B - B_bar vanishes in Euclidean geometry, is non-negative in hyperbolic
/// and non-positive in spherical geometry, within 1e-12 * max(1, |B|).
SignCheck lemma2_sign_check(const Triangle& t);

/// s(b+c-a) - (s(b) + s(c) - s(a)) for sides already ordered a >= b >= c.
/// Throws UnsortedSides otherwise.
double prop_sum_bound_sorted(GeometryKind kind, double a, double b, double c);

/// Same quantity after sorting the sides into descending order.
double prop_sum_bound(const Triangle& t);

/// Hyperbolic: s(a+b-c)s(a+c-b) - (s(a)+s(b)-s(c))(s(a)+s(c)-s(b)) against
/// 4 s(b)s(c) sinh^2((b-c)/4). Spherical: the product difference with the
/// opposite orientation against 4 s(b)s(c) sin^2((b-c)/4).
/// Throws UnsupportedKind for Euclidean triangles.
Residual prop_product_identity_residual(const Triangle& t);

/// Spherical: s(a)+s(b)+s(c) - s(a+b+c) = 4 sin((a+b)/4) sin((a+c)/4) sin((b+c)/4).
/// Hyperbolic: s(a+b+c) - s(a) - s(b) - s(c) = 4 sinh((a+b)/4) sinh((a+c)/4) sinh((b+c)/4).
Residual sum_factorization_residual(GeometryKind kind, double a, double b, double c);

/// Tangent lengths from the vertices to the incircle: a = y+z, b = x+z, c = x+y.
struct RaviTriple {
    double x = 0, y = 0, z = 0;
};

/// Throws TriangleInequalityViolated unless all three tangent lengths are positive.
RaviTriple ravi_decompose(double a, double b, double c);

/// The expanded quintic x^3y^2 + x^2y^3 - 2x^2y^2z + ... against its factored
/// form x^2(y+z)(y-z)^2 + y^2(x+z)(x-z)^2 + z^2(x+y)(x-y)^2.
Residual ravi_identity_residual(double x, double y, double z);

/// x^2y^2(x-z)(y-z) + y^2z^2(y-x)(z-x) + x^2z^2(x-y)(z-y), non-negative for x, y, z > 0.
double schur_like_value(double x, double y, double z);

/// Sum of the absolute values of the three summands of schur_like_value, at least 1.
double schur_like_scale(double x, double y, double z);

}  // namespace trigon
