#pragma once

#include <random>

#include "trigon/geometry.hpp"

namespace trigon {

/// Random valid triangle for property sweeps.
///  Euclidean:  tangent lengths log-uniform on [1e-3, 1e3] (wide scale range).
///  Hyperbolic: tangent lengths log-uniform on [1e-3, 3] (sides up to 6).
///  Spherical:  sides uniform on (0, pi), rejected until valid.
Triangle random_triangle(GeometryKind kind, std::mt19937_64& rng);

}  // namespace trigon
