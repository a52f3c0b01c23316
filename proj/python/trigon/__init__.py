"""Strengthened Euler inequalities R >= 2r in Euclidean, spherical and hyperbolic geometry.

Sides are plain floats; geometries are "euclidean", "spherical", "hyperbolic"
(or "e", "s", "h"). Boxes are three (lo, hi) pairs, one per side.
"""

from ._trigon import (
    TrigonError,
    certify,
    chains,
    compare,
    evaluate_chain,
    gap,
    oracle,
    repro,
    s_value,
    search,
    triangle,
)

__all__ = [
    "TrigonError",
    "certify",
    "chains",
    "compare",
    "evaluate_chain",
    "gap",
    "oracle",
    "repro",
    "s_value",
    "search",
    "triangle",
]
