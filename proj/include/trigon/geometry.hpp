#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "trigon/error.hpp"

namespace trigon {

/// Constant-curvature plane the triangle lives in: curvature 0, +1 or -1.
enum class GeometryKind { Euclidean, Spherical, Hyperbolic };

inline constexpr std::array<GeometryKind, 3> kAllGeometries = {
    GeometryKind::Euclidean, GeometryKind::Spherical, GeometryKind::Hyperbolic};

std::string_view to_string(GeometryKind kind);

/// Accepts "euclidean|spherical|hyperbolic" and the short forms "e|s|h".
std::optional<GeometryKind> parse_geometry(std::string_view text);

/// Triangles closer than this to violating a strict constraint are rejected.
inline constexpr double kDegeneracyMargin = 1e-9;

/// The unification map: x/2, sin(x/2) or sinh(x/2).
double s_value(GeometryKind kind, double x);

/// A side triple that satisfies every validity constraint of its geometry.
/// Only constructible through validate_triangle.
class Triangle {
public:
    GeometryKind kind() const noexcept { return kind_; }
    double a() const noexcept { return sides_[0]; }
    double b() const noexcept { return sides_[1]; }
    double c() const noexcept { return sides_[2]; }
    const std::array<double, 3>& sides() const noexcept { return sides_; }

    bool operator==(const Triangle&) const = default;

private:
    friend Triangle validate_triangle(GeometryKind, double, double, double);
    Triangle(GeometryKind kind, std::array<double, 3> sides) : kind_(kind), sides_(sides) {}

    GeometryKind kind_;
    std::array<double, 3> sides_;
};

/// Throws Error with NonPositiveSide, TriangleInequalityViolated,
/// SphericalDomainViolated, or DomainError for non-finite input.
Triangle validate_triangle(GeometryKind kind, double a, double b, double c);

/// Non-throwing variant used by samplers and searchers.
std::optional<Triangle> try_triangle(GeometryKind kind, double a, double b, double c) noexcept;

struct CoreQuantities {
    std::array<double, 3> s{};  // s(a), s(b), s(c)
    double B = 0;
    double B_bar = 0;
    double euler_ratio = 0;
    double circumradius = 0;
    double inradius = 0;
};

double quantity_B(const Triangle& t);
double quantity_Bbar(const Triangle& t);

/// R/r, tan R / tan r or tanh R / tanh r, evaluated as 2 s(a)s(b)s(c) / B.
double euler_ratio(const Triangle& t);

/// R, tan R or tanh R from the unified closed form.
double circum_measure(const Triangle& t);
/// r, tan r or tanh r from the unified closed form.
double in_measure(const Triangle& t);

/// Actual radii in the triangle's own geometry. A hyperbolic triangle whose
/// vertices lie on a horocycle or hypercycle has no circumscribed circle;
/// circumradius returns +infinity for it.
double circumradius(const Triangle& t);
double inradius(const Triangle& t);

CoreQuantities core_quantities(const Triangle& t);

struct CircumMeasuresSquared {
    double sin_or_sinh_sq = 0;  // sin^2 R or sinh^2 R
    double tan_or_tanh_sq = 0;  // tan^2 R or tanh^2 R
};

/// The alternative squared circum-measures built from B-bar and B. Throws
/// UnsupportedKind for Euclidean triangles.
CircumMeasuresSquared circum_measure_squared_alt(const Triangle& t);

}  // namespace trigon
