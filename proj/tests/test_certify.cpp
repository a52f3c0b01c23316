#include <doctest.h>

#include <random>

#include "trigon/certify.hpp"

using namespace trigon;

namespace {

Box box3(GeometryKind kind, Interval a, Interval b, Interval c) { return Box{kind, {a, b, c}}; }

}  // namespace

TEST_SUITE("certify") {
    TEST_CASE("degenerate box at the equality point") {
        const Interval e = eval_gap_interval(ChainId::Gen, 1, 2, Box::cube(GeometryKind::Euclidean, 2, 2));
        CHECK(e.contains(0));
        CHECK(e.width() <= 1e-12);
    }

    TEST_CASE("GEN enclosure over [1,2]^3 contains point values") {
        const Box box = Box::cube(GeometryKind::Euclidean, 1, 2);
        const Interval e = eval_gap_interval(ChainId::Gen, 1, 2, box);
        CHECK(e.lo < 0);
        std::mt19937_64 rng(50);
        std::uniform_real_distribution<double> u(1, 2);
        for (int n = 0; n < 10000; ++n)
            if (const auto t = try_triangle(GeometryKind::Euclidean, u(rng), u(rng), u(rng)))
                CHECK(e.contains(gap_value(ChainId::Gen, 1, 2, *t)));
    }

    TEST_CASE("enclosures contain point values") {
        std::mt19937_64 rng(51);
        std::uniform_real_distribution<double> u(0, 1);
        const struct {
            ChainId chain;
            std::size_t i, j;
            GeometryKind kind;
            double lo, hi;
        } cases[] = {{ChainId::Gen, 1, 2, GeometryKind::Euclidean, 1, 2},
                     {ChainId::Gen, 0, 1, GeometryKind::Spherical, 0.2, 2.5},
                     {ChainId::HypOrigRatioExt, 0, 3, GeometryKind::Hyperbolic, 0.2, 3},
                     {ChainId::SphSym, 1, 2, GeometryKind::Spherical, 0.2, 2.5},
                     {ChainId::EucSym, 3, 4, GeometryKind::Euclidean, 0.5, 3}};
        for (const auto& cs : cases) {
            int boxes = 0;
            while (boxes < 2000) {
                Interval s[3];
                for (auto& side : s) {
                    const double lo = cs.lo + (cs.hi - cs.lo) * u(rng);
                    side = {lo, std::min(cs.hi, lo + 0.3 * u(rng))};
                }
                const Box box = box3(cs.kind, s[0], s[1], s[2]);
                Interval e;
                try {
                    e = eval_gap_interval(cs.chain, cs.i, cs.j, box);
                } catch (const Error&) {
                    continue;  // no valid point, or an unbounded denominator
                }
                ++boxes;
                for (int k = 0; k < 20; ++k) {
                    const auto t = try_triangle(cs.kind, s[0].lo + u(rng) * s[0].width(),
                                                s[1].lo + u(rng) * s[1].width(), s[2].lo + u(rng) * s[2].width());
                    if (t) CHECK(e.contains(gap_value(cs.chain, cs.i, cs.j, *t)));
                }
            }
        }
    }

    TEST_CASE("child enclosures lie inside the parent") {
        std::mt19937_64 rng(52);
        std::uniform_real_distribution<double> u(0.5, 2.5);
        for (int n = 0; n < 2000; ++n) {
            const double a = u(rng), b = u(rng), c = u(rng);
            const Box box = box3(GeometryKind::Hyperbolic, {a, a + 0.2}, {b, b + 0.2}, {c, c + 0.2});
            if (classify_box(box) != BoxValidity::Valid) continue;
            const Interval parent = eval_gap_interval(ChainId::HypSymTail, 0, 1, box);
            for (const Box& child : box.bisect(box.widest_dimension())) {
                const Interval e = eval_gap_interval(ChainId::HypSymTail, 0, 1, child);
                CHECK(e.lo >= parent.lo);
                CHECK(e.hi <= parent.hi);
            }
        }
    }

    TEST_CASE("tight box around the hyperbolic witness is negative") {
        const auto around = [](double w) {
            return box3(GeometryKind::Hyperbolic, {2 - w, 2 + w}, {2 - w, 2 + w}, {0.4 - w, 0.4 + w});
        };
        CHECK(eval_gap_interval(ChainId::HypOrigRatioExt, 0, 3, around(1e-2)).hi > 0);  // dependency effect
        CHECK(eval_gap_interval(ChainId::HypOrigRatioExt, 0, 3, around(1e-6)).hi < 0);
    }

    TEST_CASE("invalid boxes") {
        CHECK(classify_box(box3(GeometryKind::Euclidean, {1, 1.1}, {1, 1.1}, {5, 6})) == BoxValidity::Invalid);
        CHECK(classify_box(box3(GeometryKind::Spherical, {2.5, 2.6}, {2.5, 2.6}, {2.5, 2.6})) ==
              BoxValidity::Invalid);
        CHECK(classify_box(Box::cube(GeometryKind::Euclidean, 0.5, 2.5)) == BoxValidity::Straddling);
        CHECK_THROWS_AS(eval_gap_interval(ChainId::Gen, 1, 2, box3(GeometryKind::Euclidean, {1, 1}, {1, 1}, {5, 6})),
                        Error);
        CHECK_THROWS_AS(certify_region(ChainId::EucOrig, 0, 1, Box::cube(GeometryKind::Hyperbolic, 1, 2)), Error);
    }

    TEST_CASE("hyperbolic refutation") {
        const Box box = box3(GeometryKind::Hyperbolic, {1.9, 2.1}, {1.9, 2.1}, {0.35, 0.45});
        const Certificate c = certify_region(ChainId::HypOrigRatioExt, 0, 3, box);
        REQUIRE(c.status == CertificateStatus::Refuted);
        REQUIRE(c.witness.has_value());
        const auto& t = c.witness->triangle;
        CHECK(gap_value(ChainId::HypOrigRatioExt, 0, 3, t) == c.witness->gap);
        CHECK(c.witness->gap < -1e-12);
        CHECK(std::abs(t.a() - 2) <= 0.1);
        CHECK(std::abs(t.c() - 0.4) <= 0.05);
    }

    TEST_CASE("small proofs and budget exhaustion") {
        CHECK(certify_region(ChainId::EucOrig, 1, 2, Box::cube(GeometryKind::Euclidean, 1, 1.3)).status ==
              CertificateStatus::Proven);
        CHECK(certify_region(ChainId::HypSymTail, 0, 1, Box::cube(GeometryKind::Hyperbolic, 1, 1.3)).status ==
              CertificateStatus::Proven);
        CHECK(certify_region(ChainId::SphOrig, 0, 1, Box::cube(GeometryKind::Spherical, 1, 1.3)).status ==
              CertificateStatus::Proven);
        CertifyOptions opts;
        opts.max_boxes = 50;
        const auto c = certify_region(ChainId::Gen, 1, 2, Box::cube(GeometryKind::Euclidean, 0.5, 2.5), opts);
        CHECK(c.status == CertificateStatus::Inconclusive);
        CHECK(c.boxes_processed == 50);
        CHECK(c.remaining_boxes > 0);
    }

    TEST_CASE("proof: GEN middle >= 2 over [0.5, 2.5]^3" * doctest::timeout(120)) {
        const auto c = certify_region(ChainId::Gen, 1, 2, Box::cube(GeometryKind::Euclidean, 0.5, 2.5));
        CHECK(c.status == CertificateStatus::Proven);
        CHECK(c.remaining_boxes == 0);
    }

    TEST_CASE("proof: EUC_ORIG cubic >= cyclic - 1 over [1, 3]^3" * doctest::timeout(240)) {
        const auto c = certify_region(ChainId::EucOrig, 1, 2, Box::cube(GeometryKind::Euclidean, 1, 3));
        CHECK(c.status == CertificateStatus::Proven);
    }

    TEST_CASE("thread count does not change the outcome") {
        const Box proof = Box::cube(GeometryKind::Euclidean, 1, 1.4);
        const Box refute = box3(GeometryKind::Hyperbolic, {1.9, 2.1}, {1.9, 2.1}, {0.35, 0.45});
        const Box wide = Box::cube(GeometryKind::Hyperbolic, 0.1, 4);
        std::optional<Certificate> first[3];
        for (unsigned threads : {1u, 4u, 8u}) {
            CertifyOptions opts;
            opts.threads = threads;
            const Certificate c[3] = {certify_region(ChainId::EucSym, 1, 2, proof, opts),
                                      certify_region(ChainId::HypOrigRatioExt, 0, 3, refute, opts),
                                      certify_region(ChainId::HypOrigRatioExt, 0, 1, wide, opts)};
            for (int k = 0; k < 3; ++k) {
                if (!first[k]) {
                    first[k] = c[k];
                    continue;
                }
                CHECK(c[k].status == first[k]->status);
                CHECK(c[k].boxes_processed == first[k]->boxes_processed);
                CHECK(c[k].remaining_boxes == first[k]->remaining_boxes);
                CHECK(c[k].witness.has_value() == first[k]->witness.has_value());
                if (c[k].witness) {
                    CHECK(c[k].witness->triangle == first[k]->witness->triangle);
                    CHECK(c[k].witness->gap == first[k]->witness->gap);
                }
            }
        }
    }
}
