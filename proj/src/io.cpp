#include "trigon/io.hpp"

#include <cmath>
#include <cstdio>

namespace trigon {

namespace {

json sides_json(const std::array<double, 3>& s) { return json::array({s[0], s[1], s[2]}); }

json residual_json(const Residual& r) {
    return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}, {"scale", r.scale}};
}

void write_number(std::string& out, double v) {
    if (std::isnan(v)) {
        out += "null";
        return;
    }
    if (std::isinf(v)) {
        // JSON has no infinity; mirror the convention of printing a string.
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write(std::string& out, const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += json(key).dump();
                out += ':';
                write(out, value);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                write(out, value);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: write_number(out, j.get<double>()); break;
        default: out += j.dump(); break;
    }
}

}  // namespace

std::string dump_json(const json& j) {
    std::string out;
    write(out, j);
    out += '\n';
    return out;
}

json to_json(const Triangle& t) {
    return {{"geometry", to_string(t.kind())}, {"sides", sides_json(t.sides())}};
}

json to_json(const CoreQuantities& q, const Triangle& t) {
    const auto sign = lemma2_sign_check(t);
    return {{"geometry", to_string(t.kind())},
            {"sides", sides_json(t.sides())},
            {"s", sides_json(q.s)},
            {"B", q.B},
            {"B_bar", q.B_bar},
            {"B_minus_B_bar", sign.diff},
            {"B_le_B_bar", q.B <= q.B_bar},
            {"euler_ratio", q.euler_ratio},
            {"circumradius", q.circumradius},
            {"inradius", q.inradius}};
}

json to_json(const ChainReport& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"name", t.name}, {"value", t.value}});
    json first = nullptr;
    if (r.first_violation) first = *r.first_violation;
    return {{"chain", to_string(r.chain)},
            {"geometry", to_string(r.triangle.kind())},
            {"sides", sides_json(r.triangle.sides())},
            {"terms", terms},
            {"gaps", r.gaps},
            {"verdict", r.holds ? "holds" : "violated"},
            {"first_violation", first}};
}

json to_json(const Certificate& c) {
    json witness = nullptr;
    if (c.witness) witness = {{"sides", sides_json(c.witness->triangle.sides())}, {"gap", c.witness->gap}};
    return {{"status", to_string(c.status)},
            {"witness", witness},
            {"boxes_processed", c.boxes_processed},
            {"max_depth_reached", c.max_depth_reached},
            {"remaining_boxes", c.remaining_boxes},
            {"elapsed_seconds", c.elapsed_seconds}};
}

json to_json(const SearchResult& r) {
    json out{{"best_value", r.best_value},
             {"best_triangle", to_json(r.best_triangle)},
             {"evaluations", r.evaluations}};
    if (!r.trace.empty()) {
        json trace = json::array();
        for (const auto& p : r.trace) trace.push_back({{"iteration", p.iteration}, {"best_value", p.best_value}});
        out["trace"] = trace;
    }
    return out;
}

json to_json(const Comparability& c) {
    auto opt = [](const std::optional<Triangle>& t) -> json { return t ? to_json(*t) : json(nullptr); };
    return {{"relation", to_string(c.relation)},
            {"witness_pos", opt(c.witness_pos)},
            {"witness_neg", opt(c.witness_neg)},
            {"min_gap_ij", c.min_gap_ij},
            {"min_gap_ji", c.min_gap_ji},
            {"samples", c.samples}};
}

json to_json(const ReproRow& r) {
    return {{"label", r.label},
            {"geometry", to_string(r.geometry)},
            {"sides", sides_json(r.sides)},
            {"quantity", r.quantity},
            {"computed", r.computed},
            {"reference", r.reference},
            {"abs_diff", r.abs_diff},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"realizable", r.realizable}};
}

json oracle_report(const Triangle& t) {
    json out = to_json(t);
    const auto transfer = lemma1_transfer(t);
    out["transfer"] = {{"sides", sides_json(transfer.sides)}, {"is_euclidean_triangle", transfer.is_euclidean_triangle}};
    const auto sign = lemma2_sign_check(t);
    out["sign_law"] = {{"B_minus_B_bar", sign.diff}, {"conforms", sign.conforms}};
    out["sum_bound"] = prop_sum_bound(t);
    const auto ravi = ravi_decompose(t.a(), t.b(), t.c());
    out["ravi"] = {{"x", ravi.x}, {"y", ravi.y}, {"z", ravi.z}};
    out["ravi_identity"] = residual_json(ravi_identity_residual(ravi.x, ravi.y, ravi.z));
    out["schur_like"] = schur_like_value(ravi.x, ravi.y, ravi.z);
    if (t.kind() != GeometryKind::Euclidean) {
        out["product_identity"] = residual_json(prop_product_identity_residual(t));
        out["sum_factorization"] = residual_json(sum_factorization_residual(t.kind(), t.a(), t.b(), t.c()));
        const auto alt = circum_measure_squared_alt(t);
        out["circum_measures_squared"] = {{"sin_or_sinh_sq", alt.sin_or_sinh_sq},
                                          {"tan_or_tanh_sq", alt.tan_or_tanh_sq}};
    }
    return out;
}

}  // namespace trigon
