#include "trigon/search.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "trigon/parallel.hpp"

namespace trigon {

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::AlwaysGeq: return "always_geq";
        case Relation::AlwaysLeq: return "always_leq";
        case Relation::Incomparable: return "incomparable";
        case Relation::Undetermined: return "undetermined";
    }
    return "unknown";
}

namespace {

using Point = std::array<double, 3>;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
    double value = kInf;
    Point x{};

    // Lower value wins; ties go to the lexicographically smallest point.
    bool better_than(const Candidate& other) const {
        if (value != other.value) return value < other.value;
        return x < other.x;
    }
};

class GapObjective {
public:
    GapObjective(ChainId chain, std::size_t i, std::size_t j, GeometryKind kind)
        : chain_(chain), i_(i), j_(j), kind_(kind) {}

    // Points outside the validity region are penalised with +infinity.
    double operator()(const Point& x) const {
        const auto t = try_triangle(kind_, x[0], x[1], x[2]);
        if (!t) return kInf;
        return gap_value(chain_, i_, j_, *t);
    }

    GeometryKind kind() const { return kind_; }

private:
    ChainId chain_;
    std::size_t i_, j_;
    GeometryKind kind_;
};

double grid_coord(const Interval& range, int k, int n) {
    if (n <= 1) return range.mid();
    if (k == n - 1) return range.hi;
    return range.lo + (range.hi - range.lo) * static_cast<double>(k) / (n - 1);
}

/// Nelder-Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
Candidate nelder_mead(const GapObjective& f, const Point& start, const Point& step, int iterations,
                      std::size_t& evaluations, std::vector<TracePoint>* trace) {
    std::array<Candidate, 4> simplex;
    auto eval = [&](const Point& x) {
        ++evaluations;
        return Candidate{f(x), x};
    };
    simplex[0] = eval(start);
    for (std::size_t d = 0; d < 3; ++d) {
        Candidate best_try;
        for (double scale : {1.0, -1.0, 0.25, -0.25}) {
            Point x = start;
            x[d] += scale * step[d];
            best_try = eval(x);
            if (std::isfinite(best_try.value)) break;
        }
        simplex[d + 1] = best_try;
    }

    auto combine = [](const Point& base, const Point& dir_to, double coef) {
        Point r;
        for (std::size_t d = 0; d < 3; ++d) r[d] = base[d] + coef * (dir_to[d] - base[d]);
        return r;
    };

    for (int it = 0; it < iterations; ++it) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Candidate& p, const Candidate& q) { return p.better_than(q); });
        if (trace) trace->push_back({it, simplex[0].value});

        Point centroid{};
        for (std::size_t v = 0; v < 3; ++v)
            for (std::size_t d = 0; d < 3; ++d) centroid[d] += simplex[v].x[d] / 3.0;

        const Candidate& worst = simplex[3];
        const Candidate reflected = eval(combine(centroid, worst.x, -1.0));
        if (reflected.better_than(simplex[0])) {
            const Candidate expanded = eval(combine(centroid, reflected.x, 2.0));
            simplex[3] = expanded.better_than(reflected) ? expanded : reflected;
            continue;
        }
        if (reflected.better_than(simplex[2])) {
            simplex[3] = reflected;
            continue;
        }
        const bool outside = reflected.better_than(worst);
        const Candidate contracted =
            outside ? eval(combine(centroid, reflected.x, 0.5)) : eval(combine(centroid, worst.x, 0.5));
        if (contracted.better_than(outside ? reflected : worst)) {
            simplex[3] = contracted;
            continue;
        }
        for (std::size_t v = 1; v < 4; ++v) simplex[v] = eval(combine(simplex[0].x, simplex[v].x, 0.5));
    }
    return *std::min_element(simplex.begin(), simplex.end(),
                             [](const Candidate& p, const Candidate& q) { return p.better_than(q); });
}

}  // namespace

SearchResult minimize_gap(ChainId chain, std::size_t i, std::size_t j, const Box& domain, const SearchOptions& opts) {
    require_kind(chain, domain.kind);
    const auto n_terms = chain_terms(chain).size();
    if (i >= n_terms || j >= n_terms) throw Error(ErrorCode::IndexOutOfRange, "gap index out of range");
    if (i == j) throw Error(ErrorCode::InvalidArgument, "a gap needs two distinct term indices");
    if (opts.grid_n < 2 || opts.refine_iters < 0 || opts.random_starts < 0)
        throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2 and counts non-negative");
    for (const auto& side : domain.sides)
        if (!(side.lo <= side.hi) || !std::isfinite(side.lo) || !std::isfinite(side.hi))
            throw Error(ErrorCode::InvalidArgument, "domain sides must be finite intervals with lo <= hi");

    const GapObjective f(chain, i, j, domain.kind);
    const int n = opts.grid_n;
    const auto& s = domain.sides;

    // Coarse stage: one slot per a-slice, reduced in slice order.
    std::vector<Candidate> slice_best(static_cast<std::size_t>(n));
    WorkerPool pool(resolve_threads(opts.threads));
    pool.run(static_cast<std::size_t>(n), [&](std::size_t ka) {
        Candidate best;
        const double a = grid_coord(s[0], static_cast<int>(ka), n);
        for (int kb = 0; kb < n; ++kb)
            for (int kc = 0; kc < n; ++kc) {
                const Candidate c{0, {a, grid_coord(s[1], kb, n), grid_coord(s[2], kc, n)}};
                const Candidate scored{f(c.x), c.x};
                if (scored.better_than(best)) best = scored;
            }
        slice_best[ka] = best;
    });
    std::size_t evaluations = static_cast<std::size_t>(n) * n * n;
    Candidate best;
    for (const auto& c : slice_best)
        if (c.better_than(best)) best = c;

    std::mt19937_64 rng(opts.seed);
    std::array<std::uniform_real_distribution<double>, 3> dist{
        std::uniform_real_distribution<double>(s[0].lo, s[0].hi),
        std::uniform_real_distribution<double>(s[1].lo, s[1].hi),
        std::uniform_real_distribution<double>(s[2].lo, s[2].hi)};
    for (int k = 0; k < opts.random_starts; ++k) {
        Point x;
        for (std::size_t d = 0; d < 3; ++d) x[d] = dist[d](rng);
        ++evaluations;
        const Candidate c{f(x), x};
        if (c.better_than(best)) best = c;
    }

    if (!std::isfinite(best.value))
        throw Error(ErrorCode::EmptyDomain, "no valid triangle found in the search domain");

    Point step;
    for (std::size_t d = 0; d < 3; ++d) {
        const double spacing = (s[d].hi - s[d].lo) / (n - 1);
        step[d] = spacing > 0 ? spacing : 1e-3 * (1 + std::abs(best.x[d]));
    }

    std::vector<TracePoint> trace;
    if (opts.refine_iters > 0) {
        const Candidate refined =
            nelder_mead(f, best.x, step, opts.refine_iters, evaluations, opts.record_trace ? &trace : nullptr);
        // The simplex may wander outside the domain box; keep only in-domain improvements.
        bool inside = true;
        for (std::size_t d = 0; d < 3; ++d) inside = inside && s[d].contains(refined.x[d]);
        if (inside && refined.better_than(best)) best = refined;
    }

    const Triangle t = validate_triangle(domain.kind, best.x[0], best.x[1], best.x[2]);
    return SearchResult{gap_value(chain, i, j, t), t, evaluations, std::move(trace)};
}

Comparability comparability_scan(ChainId chain, std::size_t i, std::size_t j, const Box& domain,
                                 const SearchOptions& opts) {
    const SearchResult ij = minimize_gap(chain, i, j, domain, opts);
    const SearchResult ji = minimize_gap(chain, j, i, domain, opts);
    Comparability out;
    out.min_gap_ij = ij.best_value;
    out.min_gap_ji = ji.best_value;
    out.samples = ij.evaluations + ji.evaluations;
    const bool below = ij.best_value < -kComparabilityThreshold;  // term[i] < term[j] somewhere
    const bool above = ji.best_value < -kComparabilityThreshold;  // term[i] > term[j] somewhere
    if (below && above) {
        out.relation = Relation::Incomparable;
        out.witness_pos = ji.best_triangle;
        out.witness_neg = ij.best_triangle;
    } else if (above) {
        out.relation = Relation::AlwaysGeq;
    } else if (below) {
        out.relation = Relation::AlwaysLeq;
    } else {
        out.relation = Relation::Undetermined;
    }
    return out;
}

}  // namespace trigon
