// trigon: command-line front end for evaluation, chain checks, oracles,
// certification, search, sweeps and reproduction of reference values.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigon/certify.hpp"
#include "trigon/chains.hpp"
#include "trigon/error.hpp"
#include "trigon/geometry.hpp"
#include "trigon/io.hpp"
#include "trigon/oracles.hpp"
#include "trigon/repro.hpp"
#include "trigon/sampling.hpp"
#include "trigon/search.hpp"

using namespace trigon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInvalidTriangle = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string sides_str(const std::array<double, 3>& s) {
    return "(" + fmt(s[0]) + ", " + fmt(s[1]) + ", " + fmt(s[2]) + ")";
}

GeometryKind geometry_or_die(const std::string& text) {
    auto g = parse_geometry(text);
    if (!g) throw UsageError("unknown geometry '" + text + "'");
    return *g;
}

ChainId chain_or_die(const std::string& text) {
    auto id = parse_chain_id(text);
    if (!id) throw UsageError("unknown chain '" + text + "'");
    return *id;
}

// Geometry from --geometry when given, otherwise implied by the chain.
GeometryKind resolve_geometry(ChainId chain, const std::string& text) {
    const GeometryKind kind = text.empty() ? default_geometry(chain) : geometry_or_die(text);
    require_kind(chain, kind);
    return kind;
}

std::pair<double, double> default_range(GeometryKind kind) {
    if (kind == GeometryKind::Spherical) return {0.05, std::numbers::pi - 0.05};
    return {0.1, 4.0};
}

struct Common {
    std::string format = "table";
    bool json() const { return format == "json"; }
};

struct GapArgs {
    std::string chain;
    std::string geometry;
    std::vector<std::size_t> gap;
    std::vector<double> a, b, c, box;
    unsigned threads = 0;
};

void add_gap_options(CLI::App* cmd, GapArgs& g) {
    cmd->add_option("--chain", g.chain, "chain key, e.g. hyp_orig_ratio_ext")->required();
    cmd->add_option("--geometry", g.geometry, "euclidean|spherical|hyperbolic (or e|s|h)");
    cmd->add_option("--gap", g.gap, "term indices i j; the claim is term[i] >= term[j]")->expected(2)->required();
    cmd->add_option("--a", g.a, "range for side a")->expected(2);
    cmd->add_option("--b", g.b, "range for side b")->expected(2);
    cmd->add_option("--c", g.c, "range for side c")->expected(2);
    cmd->add_option("--box", g.box, "common range for all sides")->expected(2);
    cmd->add_option("--threads", g.threads, "worker threads (0: TRIGON_THREADS or all cores)");
}

struct ResolvedGap {
    ChainId chain;
    std::size_t i, j;
    Box box;
};

ResolvedGap resolve_gap(const GapArgs& g) {
    const ChainId chain = chain_or_die(g.chain);
    const GeometryKind kind = resolve_geometry(chain, g.geometry);
    const std::size_t n = chain_terms(chain).size();
    if (g.gap[0] >= n || g.gap[1] >= n || g.gap[0] == g.gap[1])
        throw UsageError("--gap needs two distinct indices below " + std::to_string(n));
    auto [lo, hi] = default_range(kind);
    if (!g.box.empty()) lo = g.box[0], hi = g.box[1];
    Box box = Box::cube(kind, lo, hi);
    const std::vector<double>* per_side[3] = {&g.a, &g.b, &g.c};
    for (int k = 0; k < 3; ++k)
        if (!per_side[k]->empty()) box.sides[k] = Interval{(*per_side[k])[0], (*per_side[k])[1]};
    for (const auto& s : box.sides)
        if (!(s.lo > 0 && s.lo <= s.hi && std::isfinite(s.hi))) throw UsageError("side ranges must satisfy 0 < lo <= hi");
    return {chain, g.gap[0], g.gap[1], box};
}

Triangle triangle_from(GeometryKind kind, const std::vector<double>& sides) {
    return validate_triangle(kind, sides[0], sides[1], sides[2]);
}

// --- eval ---------------------------------------------------------------

int cmd_eval(const Common& common, const std::string& geometry, const std::vector<double>& sides) {
    const Triangle t = triangle_from(geometry_or_die(geometry), sides);
    const CoreQuantities q = core_quantities(t);
    if (common.json()) {
        std::cout << dump_json(to_json(q, t));
        return kExitOk;
    }
    std::cout << "geometry      " << to_string(t.kind()) << '\n'
              << "sides         " << sides_str(t.sides()) << '\n'
              << "s-values      " << sides_str(q.s) << '\n'
              << "B             " << fmt(q.B) << '\n'
              << "B_bar         " << fmt(q.B_bar) << '\n'
              << "B <= B_bar    " << (q.B <= q.B_bar ? "yes" : "no") << '\n'
              << "euler_ratio   " << fmt(q.euler_ratio) << '\n'
              << "circumradius  " << fmt(q.circumradius) << '\n'
              << "inradius      " << fmt(q.inradius) << '\n';
    return kExitOk;
}

// --- chain --------------------------------------------------------------

int cmd_chain(const Common& common, const std::string& id, const std::string& geometry,
              const std::vector<double>& sides, double tol) {
    const ChainId chain = chain_or_die(id);
    const GeometryKind kind = resolve_geometry(chain, geometry);
    const ChainReport r = evaluate_chain(chain, triangle_from(kind, sides), tol);
    if (common.json()) {
        std::cout << dump_json(to_json(r));
    } else {
        std::cout << chain_info(chain).title << " on " << to_string(kind) << ' ' << sides_str(r.triangle.sides())
                  << '\n';
        for (std::size_t k = 0; k < r.terms.size(); ++k) {
            std::printf("  %-20s %.15g\n", r.terms[k].name.c_str(), r.terms[k].value);
            if (k < r.gaps.size()) std::printf("  %-20s   gap %+.6e\n", "", r.gaps[k]);
        }
        std::cout << "verdict: " << (r.holds ? "holds" : "violated");
        if (r.first_violation) std::cout << " (first at gap " << *r.first_violation << ')';
        std::cout << '\n';
    }
    return r.holds ? kExitOk : kExitViolated;
}

// --- oracle -------------------------------------------------------------

struct OracleTally {
    std::size_t samples = 0, transfer_fail = 0, sign_fail = 0, residual_fail = 0;
    double worst_relative = 0;
};

void check_residual(OracleTally& tally, const Residual& r) {
    tally.worst_relative = std::max(tally.worst_relative, std::abs(r.residual) / r.scale);
    if (!r.within(1e-10)) ++tally.residual_fail;
}

int cmd_oracle(const Common& common, const std::string& geometry, const std::vector<double>& sides,
               std::size_t samples, std::uint64_t seed) {
    const GeometryKind kind = geometry_or_die(geometry);
    if (!sides.empty()) {
        const json report = oracle_report(triangle_from(kind, sides));
        if (common.json()) {
            std::cout << dump_json(report);
        } else {
            std::cout << report.dump(2) << '\n';
        }
        return kExitOk;
    }
    std::mt19937_64 rng(seed);
    OracleTally tally;
    for (std::size_t n = 0; n < samples; ++n) {
        const Triangle t = random_triangle(kind, rng);
        ++tally.samples;
        if (!lemma1_transfer(t).is_euclidean_triangle) ++tally.transfer_fail;
        if (!lemma2_sign_check(t).conforms) ++tally.sign_fail;
        const auto ravi = ravi_decompose(t.a(), t.b(), t.c());
        check_residual(tally, ravi_identity_residual(ravi.x, ravi.y, ravi.z));
        if (schur_like_value(ravi.x, ravi.y, ravi.z) < -1e-10 * schur_like_scale(ravi.x, ravi.y, ravi.z))
            ++tally.residual_fail;
        if (kind != GeometryKind::Euclidean) {
            check_residual(tally, prop_product_identity_residual(t));
            check_residual(tally, sum_factorization_residual(kind, t.a(), t.b(), t.c()));
        }
    }
    const bool ok = tally.transfer_fail == 0 && tally.sign_fail == 0 && tally.residual_fail == 0;
    if (common.json()) {
        json out{{"geometry", to_string(kind)},
                 {"samples", tally.samples},
                 {"seed", seed},
                 {"transfer_failures", tally.transfer_fail},
                 {"sign_failures", tally.sign_fail},
                 {"residual_failures", tally.residual_fail},
                 {"worst_relative_residual", tally.worst_relative},
                 {"pass", ok}};
        std::cout << dump_json(out);
    } else {
        std::cout << "geometry " << to_string(kind) << ", " << tally.samples << " samples (seed " << seed << ")\n"
                  << "  transfer failures   " << tally.transfer_fail << '\n'
                  << "  sign-law failures   " << tally.sign_fail << '\n'
                  << "  residual failures   " << tally.residual_fail << '\n'
                  << "  worst |res|/scale   " << fmt(tally.worst_relative) << '\n'
                  << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitViolated;
}

// --- certify ------------------------------------------------------------

int cmd_certify(const Common& common, const GapArgs& g, const CertifyOptions& base) {
    const ResolvedGap rg = resolve_gap(g);
    CertifyOptions opts = base;
    opts.threads = g.threads;
    const Certificate cert = certify_region(rg.chain, rg.i, rg.j, rg.box, opts);
    if (common.json()) {
        std::cout << dump_json(to_json(cert));
    } else {
        const auto terms = chain_terms(rg.chain);
        std::cout << "claim      " << terms[rg.i].name << " >= " << terms[rg.j].name << " on "
                  << to_string(rg.box.kind) << " box\n"
                  << "status     " << to_string(cert.status) << '\n';
        if (cert.witness)
            std::cout << "witness    " << sides_str(cert.witness->triangle.sides()) << " gap "
                      << fmt17(cert.witness->gap) << '\n';
        std::cout << "boxes      " << cert.boxes_processed << " processed, " << cert.remaining_boxes
                  << " undecided, depth " << cert.max_depth_reached << '\n'
                  << "closed     " << cert.discarded_invalid << " invalid, " << cert.closed_first_order
                  << " first order, " << cert.closed_second_order << " second order\n"
                  << "elapsed    " << fmt(cert.elapsed_seconds) << " s\n";
    }
    switch (cert.status) {
        case CertificateStatus::Proven: return kExitOk;
        case CertificateStatus::Refuted: return kExitViolated;
        case CertificateStatus::Inconclusive: break;
    }
    return kExitInconclusive;
}

// --- search / compare ---------------------------------------------------

int cmd_search(const Common& common, const GapArgs& g, SearchOptions opts) {
    const ResolvedGap rg = resolve_gap(g);
    opts.threads = g.threads;
    const SearchResult r = minimize_gap(rg.chain, rg.i, rg.j, rg.box, opts);
    if (common.json()) {
        std::cout << dump_json(to_json(r));
    } else {
        const auto terms = chain_terms(rg.chain);
        std::cout << "minimum of " << terms[rg.i].name << " - " << terms[rg.j].name << '\n'
                  << "  value     " << fmt17(r.best_value) << '\n'
                  << "  at        " << sides_str(r.best_triangle.sides()) << '\n'
                  << "  evals     " << r.evaluations << '\n';
        for (const auto& p : r.trace) std::printf("  iter %4d  %.17g\n", p.iteration, p.best_value);
    }
    return kExitOk;
}

int cmd_compare(const Common& common, const GapArgs& g, SearchOptions opts) {
    const ResolvedGap rg = resolve_gap(g);
    opts.threads = g.threads;
    const Comparability c = comparability_scan(rg.chain, rg.i, rg.j, rg.box, opts);
    if (common.json()) {
        std::cout << dump_json(to_json(c));
    } else {
        const auto terms = chain_terms(rg.chain);
        std::cout << terms[rg.i].name << " vs " << terms[rg.j].name << ": " << to_string(c.relation) << '\n'
                  << "  min (i - j)  " << fmt17(c.min_gap_ij) << '\n'
                  << "  min (j - i)  " << fmt17(c.min_gap_ji) << '\n';
        if (c.witness_pos) std::cout << "  i > j at     " << sides_str(c.witness_pos->sides()) << '\n';
        if (c.witness_neg) std::cout << "  i < j at     " << sides_str(c.witness_neg->sides()) << '\n';
    }
    return kExitOk;
}

// --- sweep --------------------------------------------------------------

int cmd_sweep(const std::string& id, const std::string& geometry, int grid, const std::vector<std::string>& fixes,
              const std::vector<double>& range, double tol) {
    const ChainId chain = chain_or_die(id);
    const GeometryKind kind = resolve_geometry(chain, geometry);
    if (grid < 2) throw UsageError("--grid must be at least 2");
    auto [lo, hi] = default_range(kind);
    if (!range.empty()) lo = range[0], hi = range[1];

    std::array<std::optional<double>, 3> fixed;
    for (const auto& f : fixes) {
        const auto eq = f.find('=');
        if (eq != 1 || f.size() < 3 || f[0] < 'a' || f[0] > 'c') throw UsageError("--fix expects a=V, b=V or c=V");
        try {
            fixed[f[0] - 'a'] = std::stod(f.substr(2));
        } catch (const std::exception&) {
            throw UsageError("bad number in --fix " + f);
        }
    }

    const std::size_t k = chain_terms(chain).size();
    std::string header = "geometry,a,b,c";
    for (std::size_t n = 0; n < k; ++n) header += ",term_" + std::to_string(n);
    for (std::size_t n = 0; n + 1 < k; ++n) header += ",gap_" + std::to_string(n);
    header += ",verdict";
    std::cout << header << '\n';

    auto axis = [&](int side, int n) {
        if (fixed[side]) return *fixed[side];
        return lo + (hi - lo) * n / (grid - 1);
    };
    const int na = fixed[0] ? 1 : grid, nb = fixed[1] ? 1 : grid, nc = fixed[2] ? 1 : grid;
    const std::string gname(to_string(kind));
    std::string line;
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            for (int ic = 0; ic < nc; ++ic) {
                const auto t = try_triangle(kind, axis(0, ia), axis(1, ib), axis(2, ic));
                if (!t) continue;
                const ChainReport r = evaluate_chain(chain, *t, tol);
                line = gname + ',' + fmt17(t->a()) + ',' + fmt17(t->b()) + ',' + fmt17(t->c());
                for (const auto& term : r.terms) line += ',' + fmt17(term.value);
                for (double gap : r.gaps) line += ',' + fmt17(gap);
                line += r.holds ? ",holds\n" : ",violated\n";
                std::cout << line;
            }
    return kExitOk;
}

// --- repro --------------------------------------------------------------

int cmd_repro(const Common& common) {
    const auto rows = run_repro();
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (common.json()) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        std::cout << dump_json(json{{"rows", arr}, {"all_pass", all}});
    } else {
        std::printf("%-11s %-16s %-33s %-20s %-12s %-10s %s\n", "geometry", "sides", "quantity", "computed",
                    "reference", "|diff|", "result");
        for (const auto& r : rows) {
            std::printf("%-11s %-16s %-33s %-20.12g %-12.9g %-10.2e %s\n", std::string(to_string(r.geometry)).c_str(),
                        sides_str(r.sides).c_str(), r.quantity.c_str(), r.computed, r.reference, r.abs_diff,
                        r.pass ? "pass" : "FAIL");
            if (!r.realizable) std::printf("%-11s   (sides outside the valid domain; formula value)\n", "");
        }
        std::size_t passed = 0;
        for (const auto& r : rows) passed += r.pass;
        std::cout << passed << "/" << rows.size() << " rows within half a unit of the last printed digit\n";
    }
    return all ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strengthened Euler inequalities in constant-curvature geometries"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    std::string geometry, chain_id;
    std::vector<double> sides;
    double tol = kDefaultChainTolerance;

    auto* eval = app.add_subcommand("eval", "core quantities of one triangle");
    eval->add_option("--geometry", geometry)->required();
    eval->add_option("--sides", sides)->expected(3)->required();

    auto* chain = app.add_subcommand("chain", "evaluate an inequality chain on one triangle");
    chain->add_option("--id", chain_id)->required();
    chain->add_option("--geometry", geometry);
    chain->add_option("--sides", sides)->expected(3)->required();
    chain->add_option("--tol", tol, "relative tolerance")->capture_default_str();

    std::size_t samples = 0;
    std::uint64_t seed = 0;
    auto* oracle = app.add_subcommand("oracle", "identity and sign-law oracles (one triangle or a random sweep)");
    oracle->add_option("--geometry", geometry)->required();
    auto* oracle_sides = oracle->add_option("--sides", sides)->expected(3);
    oracle->add_option("--samples", samples, "random triangles to check")->excludes(oracle_sides);
    oracle->add_option("--seed", seed);

    GapArgs gap_args;
    CertifyOptions copts;
    auto* certify = app.add_subcommand("certify", "interval branch and bound for term[i] >= term[j]");
    add_gap_options(certify, gap_args);
    certify->add_option("--tol", copts.tol)->capture_default_str();
    certify->add_option("--max-depth", copts.max_depth)->capture_default_str();
    certify->add_option("--max-boxes", copts.max_boxes)->capture_default_str();
    certify->add_option("--min-width", copts.min_width)->capture_default_str();

    SearchOptions sopts;
    auto add_search_options = [&](CLI::App* cmd) {
        add_gap_options(cmd, gap_args);
        cmd->add_option("--seed", sopts.seed)->capture_default_str();
        cmd->add_option("--grid-n", sopts.grid_n)->capture_default_str();
        cmd->add_option("--refine-iters", sopts.refine_iters)->capture_default_str();
        cmd->add_option("--random-starts", sopts.random_starts)->capture_default_str();
    };
    auto* search = app.add_subcommand("search", "minimise term[i] - term[j] over a box");
    add_search_options(search);
    search->add_flag("--trace", sopts.record_trace, "record the refinement trace");
    auto* compare = app.add_subcommand("compare", "classify how term[i] and term[j] compare over a box");
    add_search_options(compare);

    int grid = 20;
    std::vector<std::string> fixes;
    std::vector<double> range;
    auto* sweep = app.add_subcommand("sweep", "CSV of chain terms over a grid of triangles");
    sweep->add_option("--chain", chain_id)->required();
    sweep->add_option("--geometry", geometry);
    sweep->add_option("--grid", grid, "points per free side")->capture_default_str();
    sweep->add_option("--fix", fixes, "pin a side, e.g. c=1");
    sweep->add_option("--range", range, "side range for free sides")->expected(2);
    sweep->add_option("--tol", tol)->capture_default_str();

    auto* repro = app.add_subcommand("repro", "recompute the reference counterexample values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(common, geometry, sides);
        if (*chain) return cmd_chain(common, chain_id, geometry, sides, tol);
        if (*oracle) {
            if (sides.empty() && samples == 0) throw UsageError("oracle needs --sides or --samples");
            return cmd_oracle(common, geometry, sides, samples, seed);
        }
        if (*certify) return cmd_certify(common, gap_args, copts);
        if (*search) return cmd_search(common, gap_args, sopts);
        if (*compare) return cmd_compare(common, gap_args, sopts);
        if (*sweep) return cmd_sweep(chain_id, geometry, grid, fixes, range, tol);
        if (*repro) return cmd_repro(common);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool invalid = e.is_invalid_triangle() || e.code() == ErrorCode::EmptyDomain;
        return invalid ? kExitInvalidTriangle : kExitUsage;
    }
    return kExitUsage;
}
