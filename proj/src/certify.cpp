#include "trigon/certify.hpp"

#include <chrono>
#include <limits>
#include <numbers>

#include "trigon/interval.hpp"
#include "trigon/jet.hpp"
#include "trigon/parallel.hpp"

namespace trigon {

std::string_view to_string(CertificateStatus status) {
    switch (status) {
        case CertificateStatus::Proven: return "proven";
        case CertificateStatus::Refuted: return "refuted";
        case CertificateStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

double Box::max_width() const {
    return std::max({sides[0].width(), sides[1].width(), sides[2].width()});
}

std::size_t Box::widest_dimension() const {
    std::size_t best = 0;
    for (std::size_t d = 1; d < 3; ++d)
        if (sides[d].width() > sides[best].width()) best = d;
    return best;
}

std::array<Box, 2> Box::bisect(std::size_t dim) const {
    std::array<Box, 2> out{*this, *this};
    const double m = sides[dim].mid();
    out[0].sides[dim].hi = m;
    out[1].sides[dim].lo = m;
    return out;
}

std::array<double, 3> Box::midpoint() const { return {sides[0].mid(), sides[1].mid(), sides[2].mid()}; }

BoxValidity classify_box(const Box& box) {
    constexpr double m = kDegeneracyMargin;
    const auto& [a, b, c] = box.sides;
    std::vector<Interval> constraints{a, b, c, b + c - a, a + c - b, a + b - c};
    if (box.kind == GeometryKind::Spherical) {
        const Interval pi(std::numbers::pi);
        constraints.push_back(pi - a);
        constraints.push_back(pi - b);
        constraints.push_back(pi - c);
        constraints.push_back(Interval(2 * std::numbers::pi) - (a + b + c));
    }
    bool all_valid = true;
    for (const auto& g : constraints) {
        if (g.hi <= m) return BoxValidity::Invalid;
        if (g.lo <= m) all_valid = false;
    }
    return all_valid ? BoxValidity::Valid : BoxValidity::Straddling;
}

namespace {

template <class T>
T gap_generic(const ChainInfo& info, std::size_t i, std::size_t j, GeometryKind kind, const T& a, const T& b,
              const T& c) {
    return term_value_generic<T>(info.terms[i].kind, kind, a, b, c) -
           term_value_generic<T>(info.terms[j].kind, kind, a, b, c);
}

void check_indices(ChainId chain, std::size_t i, std::size_t j, GeometryKind kind) {
    require_kind(chain, kind);
    const auto n = chain_terms(chain).size();
    if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "gap index out of range");
    if (i == j) throw Error(ErrorCode::InvalidArgument, "a gap needs two distinct term indices");
}

using IJet = Jet<Interval>;

IJet gap_jet(const ChainInfo& info, std::size_t i, std::size_t j, const Box& box) {
    return gap_generic<IJet>(info, i, j, box.kind, IJet::variable(box.sides[0], 0), IJet::variable(box.sides[1], 1),
                             IJet::variable(box.sides[2], 2));
}

/// Taylor expansion about the foot p(x) = mean(x) (1,1,1) on the equilateral
/// line. Every catalog term is cyclically symmetric and equals 2 there, so
/// the gap and its gradient vanish at p(x) and
///   gap(x) = 1/2 (x - p)^T H(xi) (x - p),
/// where x - p is orthogonal to (1,1,1) and xi lies on the segment [p, x].
/// The valid region is convex and contains p(x), so a Hessian enclosure over
/// hull(box, foot points) that is positive definite on the orthogonal plane
/// proves gap >= 0 on the box.
/// Hessian enclosure over the box in centred form: the Hessian at the
/// midpoint plus third derivatives over the box times the offsets,
/// intersected with the natural enclosure. Needs a valid midpoint so that
/// the segments from it to valid points stay valid.
std::array<Interval, 6> hessian_enclosure(const ChainInfo& info, std::size_t i, std::size_t j, const Box& box) {
    using IGrad = Grad<Interval>;
    using I3 = Jet<IGrad>;
    const auto& s = box.sides;
    const I3 f = gap_generic<I3>(info, i, j, box.kind, I3::variable(IGrad::variable(s[0], 0), 0),
                                 I3::variable(IGrad::variable(s[1], 1), 1), I3::variable(IGrad::variable(s[2], 2), 2));
    std::array<Interval, 6> H;
    for (std::size_t k = 0; k < 6; ++k) H[k] = f.h[k].v;
    const auto m = box.midpoint();
    if (!try_triangle(box.kind, m[0], m[1], m[2])) return H;
    const IJet fm = gap_jet(info, i, j, Box{box.kind, {{Interval(m[0]), Interval(m[1]), Interval(m[2])}}});
    for (std::size_t k = 0; k < 6; ++k) {
        Interval centred = fm.h[k];
        for (std::size_t d = 0; d < 3; ++d) centred += f.h[k].g[d] * (s[d] - Interval(m[d]));
        const double lo = std::max(H[k].lo, centred.lo), hi = std::min(H[k].hi, centred.hi);
        if (lo <= hi) H[k] = {lo, hi};
    }
    return H;
}

/// Taylor expansion about the foot p(x) = mean(x) (1,1,1) on the equilateral
/// line. Every catalog term is cyclically symmetric and equals 2 there, so
/// the gap and its gradient vanish at p(x) and
///   gap(x) = 1/2 (x - p)^T H(xi) (x - p),
/// where x - p is orthogonal to (1,1,1) and xi lies on the segment [p, x].
/// The valid region is convex and contains p(x), so a Hessian enclosure over
/// hull(box, foot points) that is positive definite on the orthogonal plane
/// proves gap >= 0 on the box.
bool second_order_closes(const ChainInfo& info, std::size_t i, std::size_t j, const Box& box, double reach) {
    const auto& s = box.sides;
    const Interval mean = (s[0] + s[1] + s[2]) / Interval(3.0);
    Box hull_box = box;
    for (auto& side : hull_box.sides) side = hull(side, mean);
    if (hull_box.max_width() > reach * mean.lo) return false;
    const auto h = hessian_enclosure(info, i, j, hull_box);
    const auto H = [&](std::size_t r, std::size_t q) { return h[IJet::hidx(r, q)]; };
    // Plane basis u = (1,-1,0), w = (1,1,-2).
    const Interval q11 = H(0, 0) - Interval(2.0) * H(0, 1) + H(1, 1);
    const Interval q22 = H(0, 0) + H(1, 1) + Interval(4.0) * H(2, 2) + Interval(2.0) * H(0, 1) -
                         Interval(4.0) * H(0, 2) - Interval(4.0) * H(1, 2);
    const Interval q12 = H(0, 0) - H(1, 1) - Interval(2.0) * H(0, 2) + Interval(2.0) * H(1, 2);
    if (!(q11.lo > 0)) return false;
    const Interval det = q11 * q22 - sqr(q12);
    return det.lo > 0;
}

enum class Outcome { Discarded, ClosedFirstOrder, ClosedSecondOrder, Refuted, Split, Leaf };

struct Decision {
    Outcome outcome = Outcome::Split;
    std::optional<Witness> witness;
};

struct Node {
    Box box;
    int depth = 0;
};

Decision decide(const ChainInfo& info, std::size_t i, std::size_t j, const Node& node, const CertifyOptions& opts) {
    const Box& box = node.box;
    const BoxValidity validity = classify_box(box);
    if (validity == BoxValidity::Invalid) return {Outcome::Discarded, std::nullopt};

    try {
        using IGrad = Grad<Interval>;
        const auto& sd = box.sides;
        const IGrad f = gap_generic<IGrad>(info, i, j, box.kind, IGrad::variable(sd[0], 0), IGrad::variable(sd[1], 1),
                                           IGrad::variable(sd[2], 2));
        if (f.v.lo >= 0) return {Outcome::ClosedFirstOrder, std::nullopt};
        // Mean-value form about the midpoint. The valid part of a box is
        // convex, so a valid midpoint sees every valid point along a segment.
        const auto mid = box.midpoint();
        if (validity == BoxValidity::Valid || try_triangle(box.kind, mid[0], mid[1], mid[2])) {
            Interval enclosure = gap_generic<Interval>(info, i, j, box.kind, mid[0], mid[1], mid[2]);
            for (std::size_t d = 0; d < 3; ++d) enclosure += f.g[d] * (box.sides[d] - Interval(mid[d]));
            if (enclosure.lo >= 0) return {Outcome::ClosedFirstOrder, std::nullopt};
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyIntersection) return {Outcome::Discarded, std::nullopt};
        if (e.code() != ErrorCode::DivisionByZeroInterval) throw;
    }

    try {
        if (second_order_closes(info, i, j, box, opts.second_order_reach)) return {Outcome::ClosedSecondOrder, std::nullopt};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DivisionByZeroInterval && e.code() != ErrorCode::EmptyIntersection) throw;
    }

    const auto mid = box.midpoint();
    if (auto t = try_triangle(box.kind, mid[0], mid[1], mid[2])) {
        const double g = gap_value(info.id, i, j, *t);
        if (g < -opts.tol) return {Outcome::Refuted, Witness{*t, g}};
    }

    if (box.max_width() < opts.min_width || node.depth >= opts.max_depth) return {Outcome::Leaf, std::nullopt};
    return {Outcome::Split, std::nullopt};
}

constexpr std::size_t kBatchSize = 256;

}  // namespace

Interval eval_gap_interval(ChainId chain, std::size_t i, std::size_t j, const Box& box) {
    check_indices(chain, i, j, box.kind);
    if (classify_box(box) == BoxValidity::Invalid)
        throw Error(ErrorCode::EmptyIntersection, "box contains no valid triangle");
    const auto& s = box.sides;
    return gap_generic<Interval>(chain_info(chain), i, j, box.kind, s[0], s[1], s[2]);
}

bool equality_line_test(ChainId chain, std::size_t i, std::size_t j, const Box& box) {
    check_indices(chain, i, j, box.kind);
    try {
        return second_order_closes(chain_info(chain), i, j, box, std::numeric_limits<double>::infinity());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DivisionByZeroInterval || e.code() == ErrorCode::EmptyIntersection) return false;
        throw;
    }
}

Certificate certify_region(ChainId chain, std::size_t i, std::size_t j, const Box& box, const CertifyOptions& opts) {
    check_indices(chain, i, j, box.kind);
    for (const auto& side : box.sides)
        if (!(side.lo <= side.hi) || !std::isfinite(side.lo) || !std::isfinite(side.hi))
            throw Error(ErrorCode::InvalidArgument, "box sides must be finite intervals with lo <= hi");
    if (!(opts.tol >= 0) || opts.max_depth <= 0 || opts.max_boxes == 0 || !(opts.min_width > 0))
        throw Error(ErrorCode::InvalidArgument, "certify options must be positive");

    const auto start = std::chrono::steady_clock::now();
    const ChainInfo& info = chain_info(chain);
    WorkerPool pool(resolve_threads(opts.threads));

    Certificate cert;
    std::vector<Node> stack{{box, 0}};
    std::vector<Node> batch;
    std::vector<Decision> decisions;
    std::vector<Node> children;

    while (!stack.empty() && !cert.witness) {
        const std::size_t budget = opts.max_boxes - cert.boxes_processed;
        if (budget == 0) break;
        const std::size_t take = std::min({kBatchSize, stack.size(), budget});
        batch.assign(stack.end() - static_cast<std::ptrdiff_t>(take), stack.end());
        stack.resize(stack.size() - take);
        std::reverse(batch.begin(), batch.end());  // top of the stack first

        decisions.assign(take, Decision{});
        std::vector<std::exception_ptr> errors(take);
        pool.run(take, [&](std::size_t k) {
            try {
                decisions[k] = decide(info, i, j, batch[k], opts);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });

        children.clear();
        for (std::size_t k = 0; k < take; ++k) {
            if (errors[k]) std::rethrow_exception(errors[k]);
            ++cert.boxes_processed;
            cert.max_depth_reached = std::max(cert.max_depth_reached, batch[k].depth);
            const Decision& d = decisions[k];
            switch (d.outcome) {
                case Outcome::Discarded: ++cert.discarded_invalid; break;
                case Outcome::ClosedFirstOrder: ++cert.closed_first_order; break;
                case Outcome::ClosedSecondOrder: ++cert.closed_second_order; break;
                case Outcome::Leaf: ++cert.remaining_boxes; break;
                case Outcome::Refuted: cert.witness = d.witness; break;
                case Outcome::Split: {
                    const auto halves = batch[k].box.bisect(batch[k].box.widest_dimension());
                    children.push_back({halves[0], batch[k].depth + 1});
                    children.push_back({halves[1], batch[k].depth + 1});
                    break;
                }
            }
            if (cert.witness) break;
        }
        if (cert.witness) break;
        stack.insert(stack.end(), children.rbegin(), children.rend());
    }

    if (cert.witness) {
        cert.status = CertificateStatus::Refuted;
    } else {
        cert.remaining_boxes += stack.size();
        cert.status = cert.remaining_boxes == 0 ? CertificateStatus::Proven : CertificateStatus::Inconclusive;
    }
    cert.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

Interval interval_transcendental(Transcendental fn, const Interval& x) {
    if (!(x.lo <= x.hi) || !std::isfinite(x.lo) || !std::isfinite(x.hi))
        throw Error(ErrorCode::DomainError, "interval endpoints must be finite and ordered");
    switch (fn) {
        case Transcendental::Sin:
            if (x.lo < 0 || x.hi > 2 * std::numbers::pi)
                throw Error(ErrorCode::DomainError, "sin enclosure is defined on [0, 2 pi]");
            return sin(x);
        case Transcendental::Sinh: return sinh(x);
    }
    throw Error(ErrorCode::DomainError, "unknown function");
}

}  // namespace trigon
