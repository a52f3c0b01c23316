#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigon/chains.hpp"

namespace trigon {

/// One reference counterexample value: a gap between two chain terms on a
/// specific triangle, printed as a rounded decimal.
struct ReproSpec {
    std::string label;
    GeometryKind geometry;
    std::array<double, 3> sides;
    ChainId chain;
    std::size_t i, j;
    std::string printed_value;  // exactly as printed, e.g. "-0.00923"
};

struct ReproRow {
    std::string label;
    GeometryKind geometry;
    std::array<double, 3> sides;
    std::string quantity;  // "term_i - term_j" by name
    double computed = 0;
    double reference = 0;
    double abs_diff = 0;
    double tolerance = 0;  // half a unit in the last printed digit
    bool pass = false;
    // False when the sides are not a valid triangle of the geometry (e.g. a
    // spherical perimeter of 2 pi or more); the gap is then evaluated from the
    // term formulas on the raw side lengths.
    bool realizable = true;
};

/// Half a unit in the last place of a printed decimal: "-0.00923" -> 5e-6.
double half_ulp_of_printed(const std::string& printed);

/// The six reference counterexample values.
const std::vector<ReproSpec>& reference_values();

ReproRow evaluate_repro(const ReproSpec& spec);

std::vector<ReproRow> run_repro(const std::vector<ReproSpec>& specs = reference_values());

}  // namespace trigon
