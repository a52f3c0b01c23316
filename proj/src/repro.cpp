#include "trigon/repro.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "trigon/error.hpp"

namespace trigon {

double half_ulp_of_printed(const std::string& printed) {
    const auto dot = printed.find('.');
    if (dot == std::string::npos) return 0.5;
    std::size_t decimals = 0;
    for (std::size_t k = dot + 1; k < printed.size() && std::isdigit(static_cast<unsigned char>(printed[k])); ++k)
        ++decimals;
    return 0.5 * std::pow(10.0, -static_cast<double>(decimals));
}

const std::vector<ReproSpec>& reference_values() {
    using G = GeometryKind;
    // Term indices refer to the chains in the catalog, e.g. HypOrigRatioExt
    // is [ratio, cubic, cyclic - 1, 2/3 cyclic, 2].
    static const std::vector<ReproSpec> specs{
        {"hyperbolic original, ratio below 2/3 cyclic", G::Hyperbolic, {2, 2, 0.4}, ChainId::HypOrigRatioExt, 0, 3,
         "-0.00923"},
        {"hyperbolic original, ratio above cubic", G::Hyperbolic, {2, 2, 0.5}, ChainId::HypOrigRatioExt, 0, 1,
         "0.037107"},
        {"spherical symmetric, middle above cubic", G::Spherical, {3, 3, 1.5}, ChainId::SphSymMidExt, 4, 1,
         "0.19775"},
        {"spherical symmetric, 1/3 symmetric above middle", G::Spherical, {0.75, 0.75, 1}, ChainId::SphSymMidExt, 3,
         4, "0.00418"},
        {"hyperbolic symmetric, ratio below 1/3 symmetric", G::Hyperbolic, {2.5, 2.5, 2}, ChainId::HypSymRatioExt, 0,
         3, "-0.0457201"},
        {"hyperbolic symmetric, ratio above cubic", G::Hyperbolic, {1, 1, 1.5}, ChainId::HypSymRatioExt, 0, 1,
         "0.23557"},
    };
    return specs;
}

ReproRow evaluate_repro(const ReproSpec& spec) {
    const auto& [a, b, c] = spec.sides;
    const auto terms = chain_terms(spec.chain);
    if (spec.i >= terms.size() || spec.j >= terms.size() || spec.i == spec.j)
        throw Error(ErrorCode::IndexOutOfRange, "repro row '" + spec.label + "' has a bad term index");
    require_kind(spec.chain, spec.geometry);
    ReproRow row;
    row.label = spec.label;
    row.geometry = spec.geometry;
    row.sides = spec.sides;
    row.quantity = std::string(terms[spec.i].name) + " - " + std::string(terms[spec.j].name);
    if (const auto t = try_triangle(spec.geometry, a, b, c)) {
        row.computed = gap_value(spec.chain, spec.i, spec.j, *t);
    } else {
        row.realizable = false;
        row.computed = term_value_generic<double>(terms[spec.i].kind, spec.geometry, a, b, c) -
                       term_value_generic<double>(terms[spec.j].kind, spec.geometry, a, b, c);
    }
    row.reference = std::stod(spec.printed_value);
    row.abs_diff = std::abs(row.computed - row.reference);
    row.tolerance = half_ulp_of_printed(spec.printed_value);
    row.pass = row.abs_diff <= row.tolerance;
    return row;
}

std::vector<ReproRow> run_repro(const std::vector<ReproSpec>& specs) {
    std::vector<ReproRow> rows;
    rows.reserve(specs.size());
    for (const auto& s : specs) rows.push_back(evaluate_repro(s));
    return rows;
}

}  // namespace trigon
