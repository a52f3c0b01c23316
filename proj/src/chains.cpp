#include "trigon/chains.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace trigon {

namespace {

using G = GeometryKind;

constexpr TermDescriptor kRatio{TermKind::EulerRatio, "euler_ratio", "2 s(a)s(b)s(c) / B", "ratio"};
constexpr TermDescriptor kCubic{TermKind::CubicSum, "cubic_sum",
                                "(s(a)s(b)s(c) + s(a)^3 + s(b)^3 + s(c)^3) / (2 s(a)s(b)s(c))", "cubic"};
constexpr TermDescriptor kCycMinusOne{TermKind::CyclicMinusOne, "cyclic_minus_one",
                                      "s(a)/s(b) + s(b)/s(c) + s(c)/s(a) - 1", "cyclic"};
constexpr TermDescriptor kTwoThirdsCyc{TermKind::TwoThirdsCyclic, "two_thirds_cyclic",
                                       "2/3 (s(a)/s(b) + s(b)/s(c) + s(c)/s(a))", "cyclic mean"};
constexpr TermDescriptor kHalfSym{TermKind::HalfSymMinusOne, "half_symmetric_minus_one",
                                  "1/2 (sum of the six ratios s(x)/s(y)) - 1", "symmetric"};
constexpr TermDescriptor kThirdSym{TermKind::ThirdSym, "third_symmetric",
                                   "1/3 (sum of the six ratios s(x)/s(y))", "symmetric mean"};
constexpr TermDescriptor kProductOverFour{TermKind::ProductOverFour, "product_over_four",
                                          "(a+b)(a+c)(b+c) / (4abc)", "product"};
constexpr TermDescriptor kMiddle{TermKind::UnifiedMiddle, "unified_middle",
                                 "2 s((a+b)/2) s((a+c)/2) s((b+c)/2) / (s(a)s(b)s(c))", "unified middle"};
constexpr TermDescriptor kTwo{TermKind::Two, "two", "2", "Euler bound"};

std::vector<ChainInfo> build_catalog() {
    return {
        {ChainId::EucOrig, "euc_orig", "Euclidean original strengthening", G::Euclidean, true,
         {kRatio, kCubic, kCycMinusOne, kTwoThirdsCyc, kTwo}},
        {ChainId::SphOrig, "sph_orig", "spherical original strengthening", G::Spherical, true,
         {kRatio, kCubic, kCycMinusOne, kTwoThirdsCyc, kTwo}},
        {ChainId::HypOrigTail, "hyp_orig_tail", "hyperbolic original strengthening without the ratio",
         G::Hyperbolic, true, {kCubic, kCycMinusOne, kTwoThirdsCyc, kTwo}},
        {ChainId::HypOrigRatioExt, "hyp_orig_ratio_ext", "hyperbolic original strengthening with the ratio",
         G::Hyperbolic, false, {kRatio, kCubic, kCycMinusOne, kTwoThirdsCyc, kTwo}},
        {ChainId::Gen, "gen", "unified strengthening", std::nullopt, true, {kRatio, kMiddle, kTwo}},
        {ChainId::EucSym, "euc_sym", "Euclidean symmetric strengthening", G::Euclidean, true,
         {kRatio, kCubic, kHalfSym, kThirdSym, kProductOverFour, kTwo}},
        {ChainId::SphSym, "sph_sym", "spherical symmetric strengthening", G::Spherical, true,
         {kRatio, kCubic, kHalfSym, kThirdSym, kTwo}},
        {ChainId::SphSymMidExt, "sph_sym_mid_ext", "spherical symmetric strengthening with the unified middle",
         G::Spherical, false, {kRatio, kCubic, kHalfSym, kThirdSym, kMiddle, kTwo}},
        {ChainId::HypSymTail, "hyp_sym_tail", "hyperbolic symmetric strengthening without the ratio",
         G::Hyperbolic, true, {kCubic, kHalfSym, kThirdSym, kTwo}},
        {ChainId::HypSymRatioExt, "hyp_sym_ratio_ext", "hyperbolic symmetric strengthening with the ratio",
         G::Hyperbolic, false, {kRatio, kCubic, kHalfSym, kThirdSym, kTwo}},
    };
}

const std::vector<ChainInfo>& catalog() {
    static const std::vector<ChainInfo> chains = build_catalog();
    return chains;
}

}  // namespace

std::span<const ChainInfo> all_chains() { return catalog(); }

const ChainInfo& chain_info(ChainId id) {
    const auto& chains = catalog();
    return chains[static_cast<std::size_t>(id)];
}

std::string_view to_string(ChainId id) { return chain_info(id).key; }

std::optional<ChainId> parse_chain_id(std::string_view key) {
    std::string lowered(key);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const auto& info : catalog())
        if (info.key == lowered) return info.id;
    return std::nullopt;
}

void require_kind(ChainId id, GeometryKind kind) {
    const auto& info = chain_info(id);
    if (info.geometry && *info.geometry != kind)
        throw Error(ErrorCode::KindMismatch, std::string(info.key) + " is defined only for " +
                                                 std::string(to_string(*info.geometry)) + " triangles, got " +
                                                 std::string(to_string(kind)));
}

GeometryKind default_geometry(ChainId id, GeometryKind fallback) {
    return chain_info(id).geometry.value_or(fallback);
}

std::span<const TermDescriptor> chain_terms(ChainId id) { return chain_info(id).terms; }

double term_value(ChainId id, std::size_t index, const Triangle& t) {
    require_kind(id, t.kind());
    const auto terms = chain_terms(id);
    if (index >= terms.size())
        throw Error(ErrorCode::IndexOutOfRange, "term index " + std::to_string(index) + " out of range for " +
                                                    std::string(to_string(id)));
    return term_value_generic<double>(terms[index].kind, t.kind(), t.a(), t.b(), t.c());
}

double gap_value(ChainId id, std::size_t i, std::size_t j, const Triangle& t) {
    if (i == j) throw Error(ErrorCode::InvalidArgument, "a gap needs two distinct term indices");
    return term_value(id, i, t) - term_value(id, j, t);
}

ChainReport evaluate_chain(ChainId id, const Triangle& t, double tol_rel) {
    if (!(tol_rel >= 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be non-negative");
    require_kind(id, t.kind());
    ChainReport report{id, t, {}, {}, true, std::nullopt, tol_rel};
    const auto terms = chain_terms(id);
    for (std::size_t k = 0; k < terms.size(); ++k)
        report.terms.push_back({std::string(terms[k].name), term_value(id, k, t)});
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        const double upper = report.terms[k].value;
        const double gap = upper - report.terms[k + 1].value;
        report.gaps.push_back(gap);
        if (report.holds && gap < -tol_rel * std::max(1.0, std::abs(upper))) {
            report.holds = false;
            report.first_violation = k;
        }
    }
    return report;
}

}  // namespace trigon
