#include "trigon/sampling.hpp"

#include <cmath>
#include <numbers>

namespace trigon {

namespace {

std::optional<Triangle> from_tangent_lengths(GeometryKind kind, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    const double x = std::exp(u(rng)), y = std::exp(u(rng)), z = std::exp(u(rng));
    return try_triangle(kind, y + z, x + z, x + y);
}

}  // namespace

Triangle random_triangle(GeometryKind kind, std::mt19937_64& rng) {
    for (;;) {
        std::optional<Triangle> t;
        switch (kind) {
            case GeometryKind::Euclidean: t = from_tangent_lengths(kind, rng, 1e-3, 1e3); break;
            case GeometryKind::Hyperbolic: t = from_tangent_lengths(kind, rng, 1e-3, 3.0); break;
            case GeometryKind::Spherical: {
                std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
                t = try_triangle(kind, u(rng), u(rng), u(rng));
                break;
            }
        }
        if (t) return *t;
    }
}

}  // namespace trigon
