#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "trigon/chains.hpp"
#include "trigon/interval.hpp"

namespace trigon {

/// Axis-aligned box of side lengths. It may straddle the validity boundary;
/// only its valid points matter to the evaluator.
struct Box {
    GeometryKind kind = GeometryKind::Euclidean;
    std::array<Interval, 3> sides{};

    static Box cube(GeometryKind kind, double lo, double hi) { return {kind, {{{lo, hi}, {lo, hi}, {lo, hi}}}}; }

    double max_width() const;
    std::size_t widest_dimension() const;
    std::array<Box, 2> bisect(std::size_t dim) const;
    std::array<double, 3> midpoint() const;
};

enum class BoxValidity { Valid, Straddling, Invalid };

/// Interval test of every validity constraint (with the degeneracy margin).
BoxValidity classify_box(const Box& box);

/// Enclosure of term[i] - term[j] over the valid points of the box.
/// Throws EmptyIntersection when the box holds no valid triangle, and
/// DivisionByZeroInterval when a denominator cannot be bounded away from 0.
Interval eval_gap_interval(ChainId chain, std::size_t i, std::size_t j, const Box& box);

/// Outcome of the second-order test around the equilateral line.
bool equality_line_test(ChainId chain, std::size_t i, std::size_t j, const Box& box);

struct CertifyOptions {
    double tol = 1e-12;             // a refutation witness must have gap < -tol
    int max_depth = 60;
    std::size_t max_boxes = 20'000'000;
    double min_width = 1e-6;        // leaves narrower than this stay undecided
    // The equality-line test is skipped when hull(box, foot points) is wider
    // than this fraction of the mean side; it rarely succeeds there.
    double second_order_reach = 0.06;
    unsigned threads = 0;           // 0: TRIGON_THREADS or hardware concurrency
};

enum class CertificateStatus { Proven, Refuted, Inconclusive };

std::string_view to_string(CertificateStatus status);

struct Witness {
    Triangle triangle;
    double gap;
};

struct Certificate {
    CertificateStatus status = CertificateStatus::Inconclusive;
    std::optional<Witness> witness;
    std::size_t remaining_boxes = 0;
    std::size_t boxes_processed = 0;
    int max_depth_reached = 0;
    // Statistics: how leaves were closed. Not part of the determinism contract.
    std::size_t discarded_invalid = 0;
    std::size_t closed_first_order = 0;
    std::size_t closed_second_order = 0;
    double elapsed_seconds = 0;
};

/// Branch and bound over the box: proves term[i] >= term[j] on every valid
/// triangle of the box, or returns a point-verified counterexample.
/// Subdivision bisects the widest side; boxes are processed depth first in
/// fixed-size batches so the outcome does not depend on the thread count.
Certificate certify_region(ChainId chain, std::size_t i, std::size_t j, const Box& box,
                           const CertifyOptions& opts = {});

}  // namespace trigon
