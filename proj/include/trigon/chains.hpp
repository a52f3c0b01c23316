#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigon/geometry.hpp"
#include "trigon/terms.hpp"

namespace trigon {

/// The fixed catalog of inequality chains. The *_RATIO_EXT and
/// SPH_SYM_MID_EXT entries prepend or insert a term that is known not to be
/// comparable with its neighbours; they exist so counterexamples can be
/// evaluated, searched and certified through the same interface.
enum class ChainId {
    EucOrig,
    SphOrig,
    HypOrigTail,
    HypOrigRatioExt,
    Gen,
    EucSym,
    SphSym,
    SphSymMidExt,
    HypSymTail,
    HypSymRatioExt,
};

inline constexpr std::size_t kChainCount = 10;

struct TermDescriptor {
    TermKind kind;
    std::string_view name;     // stable identifier, used in JSON and CSV
    std::string_view formula;  // human-readable
    std::string_view label;    // position within its chain
};

struct ChainInfo {
    ChainId id;
    std::string_view key;                    // CLI spelling, e.g. "euc_orig"
    std::string_view title;
    std::optional<GeometryKind> geometry;    // nullopt: all three geometries
    bool theorem_backed;
    std::vector<TermDescriptor> terms;
};

std::span<const ChainInfo> all_chains();
const ChainInfo& chain_info(ChainId id);
std::string_view to_string(ChainId id);
std::optional<ChainId> parse_chain_id(std::string_view key);

/// Throws KindMismatch when the chain is not defined for this geometry.
void require_kind(ChainId id, GeometryKind kind);

/// The geometry implied by the chain, or `fallback` for GEN.
GeometryKind default_geometry(ChainId id, GeometryKind fallback = GeometryKind::Euclidean);

std::span<const TermDescriptor> chain_terms(ChainId id);

/// Throws KindMismatch or IndexOutOfRange.
double term_value(ChainId id, std::size_t index, const Triangle& t);

/// term[i] - term[j]; any pair of distinct indices is accepted so that both
/// orientations of a comparison can be scanned.
double gap_value(ChainId id, std::size_t i, std::size_t j, const Triangle& t);

struct TermValue {
    std::string name;
    double value;
};

struct ChainReport {
    ChainId chain;
    Triangle triangle;
    std::vector<TermValue> terms;
    std::vector<double> gaps;  // value[i] - value[i+1]
    bool holds = true;
    std::optional<std::size_t> first_violation;
    double tolerance = 0;
};

inline constexpr double kDefaultChainTolerance = 1e-12;

/// A gap counts as non-negative when gap >= -tol_rel * max(1, |value[i]|).
ChainReport evaluate_chain(ChainId id, const Triangle& t, double tol_rel = kDefaultChainTolerance);

}  // namespace trigon
