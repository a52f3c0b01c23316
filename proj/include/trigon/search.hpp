#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trigon/certify.hpp"

namespace trigon {

struct SearchOptions {
    std::uint64_t seed = 0;
    int grid_n = 60;             // coarse grid points per side
    int refine_iters = 200;      // simplex iterations
    int random_starts = 64;      // extra seeded samples mixed into the coarse stage
    bool record_trace = false;
    unsigned threads = 0;
};

struct TracePoint {
    int iteration;
    double best_value;
};

struct SearchResult {
    double best_value = 0;
    Triangle best_triangle;
    std::size_t evaluations = 0;
    std::vector<TracePoint> trace;
};

/// Minimises term[i] - term[j] over the valid triangles of `domain`: a
/// uniform grid_n^3 scan followed by a simplex descent from the best cell.
/// Throws EmptyDomain when no grid or sample point is a valid triangle.
SearchResult minimize_gap(ChainId chain, std::size_t i, std::size_t j, const Box& domain,
                          const SearchOptions& opts = {});

enum class Relation { AlwaysGeq, AlwaysLeq, Incomparable, Undetermined };

std::string_view to_string(Relation relation);

struct Comparability {
    Relation relation = Relation::Undetermined;
    std::optional<Triangle> witness_pos;  // term[i] > term[j] here
    std::optional<Triangle> witness_neg;  // term[i] < term[j] here
    double min_gap_ij = 0;                // min of term[i] - term[j]
    double min_gap_ji = 0;                // min of term[j] - term[i]
    std::size_t samples = 0;
};

inline constexpr double kComparabilityThreshold = 1e-9;

/// Classifies how term[i] and term[j] compare over the domain from the signs
/// of the two minimised gaps.
Comparability comparability_scan(ChainId chain, std::size_t i, std::size_t j, const Box& domain,
                                 const SearchOptions& opts = {});

}  // namespace trigon
