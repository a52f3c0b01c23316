#include <doctest.h>

#include "support.hpp"
#include "trigon/search.hpp"

using namespace trigon;
using testing_support::rel_close;

TEST_SUITE("search") {
    TEST_CASE("hyperbolic ratio below 2/3 cyclic") {
        const auto r = minimize_gap(ChainId::HypOrigRatioExt, 0, 3, Box::cube(GeometryKind::Hyperbolic, 0.1, 4));
        CHECK(r.best_value < -0.009);
        CHECK(r.best_value == gap_value(ChainId::HypOrigRatioExt, 0, 3, r.best_triangle));
    }

    TEST_CASE("hyperbolic ratio below 1/3 symmetric") {
        const auto r = minimize_gap(ChainId::HypSymRatioExt, 0, 3, Box::cube(GeometryKind::Hyperbolic, 1, 3));
        CHECK(r.best_value <= -0.045);
    }

    TEST_CASE("theorem-backed gap stays non-negative") {
        for (auto kind : kAllGeometries) {
            const double hi = kind == GeometryKind::Spherical ? 2.0 : 3.0;
            const auto r = minimize_gap(ChainId::Gen, 1, 2, Box::cube(kind, 0.2, hi));
            CHECK(r.best_value >= -1e-12);
            CHECK(r.best_value <= 1e-3);  // the equilateral minimum is found
        }
    }

    TEST_CASE("known counterexamples are dominated") {
        const double w = 0.05;
        auto around = [&](GeometryKind kind, double a, double b, double c) {
            return Box{kind, {Interval{a - w, a + w}, Interval{b - w, b + w}, Interval{c - w, c + w}}};
        };
        SearchOptions opts;
        opts.grid_n = 20;
        CHECK(minimize_gap(ChainId::HypOrigRatioExt, 0, 3, around(GeometryKind::Hyperbolic, 2, 2, 0.4), opts)
                  .best_value <= -0.00923 + 5e-6);
        CHECK(minimize_gap(ChainId::HypSymRatioExt, 1, 0, around(GeometryKind::Hyperbolic, 1, 1, 1.5), opts)
                  .best_value <= -0.23557 + 5e-6);
        CHECK(minimize_gap(ChainId::SphSymMidExt, 4, 3, around(GeometryKind::Spherical, 0.75, 0.75, 1), opts)
                  .best_value <= -0.00418 + 5e-6);
    }

    TEST_CASE("reproducible for a fixed seed and any thread count") {
        const Box domain = Box::cube(GeometryKind::Hyperbolic, 0.1, 4);
        SearchOptions opts;
        opts.seed = 7;
        opts.grid_n = 25;
        opts.threads = 1;
        const auto base = minimize_gap(ChainId::HypOrigRatioExt, 0, 1, domain, opts);
        for (unsigned threads : {1u, 4u, 8u}) {
            opts.threads = threads;
            const auto r = minimize_gap(ChainId::HypOrigRatioExt, 0, 1, domain, opts);
            CHECK(r.best_value == base.best_value);
            CHECK(r.best_triangle == base.best_triangle);
            CHECK(r.evaluations == base.evaluations);
        }
    }

    TEST_CASE("trace is recorded on request") {
        SearchOptions opts;
        opts.grid_n = 10;
        opts.record_trace = true;
        const auto r = minimize_gap(ChainId::Gen, 0, 1, Box::cube(GeometryKind::Spherical, 0.3, 2), opts);
        CHECK_FALSE(r.trace.empty());
        for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].best_value <= r.trace[k - 1].best_value);
    }

    TEST_CASE("empty domain") {
        CHECK_THROWS_AS(minimize_gap(ChainId::Gen, 1, 2, Box{GeometryKind::Euclidean, {Interval{1, 1.1}, Interval{1, 1.1}, Interval{5, 6}}}),
                        Error);
        CHECK_THROWS_AS(minimize_gap(ChainId::Gen, 1, 2, Box::cube(GeometryKind::Spherical, 2.5, 3)), Error);
    }

    TEST_CASE("comparability") {
        const auto euler = comparability_scan(ChainId::Gen, 0, 2, Box::cube(GeometryKind::Euclidean, 0.1, 4));
        CHECK(euler.relation == Relation::AlwaysGeq);
        const auto reversed = comparability_scan(ChainId::Gen, 2, 0, Box::cube(GeometryKind::Euclidean, 0.1, 4));
        CHECK(reversed.relation == Relation::AlwaysLeq);

        const auto hyp = comparability_scan(ChainId::HypOrigRatioExt, 0, 1, Box::cube(GeometryKind::Hyperbolic, 0.1, 4));
        REQUIRE(hyp.relation == Relation::Incomparable);
        REQUIRE(hyp.witness_pos.has_value());
        REQUIRE(hyp.witness_neg.has_value());
        CHECK(gap_value(ChainId::HypOrigRatioExt, 0, 1, *hyp.witness_pos) > 1e-9);
        CHECK(gap_value(ChainId::HypOrigRatioExt, 0, 1, *hyp.witness_neg) < -1e-9);

        const auto sph =
            comparability_scan(ChainId::SphSymMidExt, 4, 3, Box::cube(GeometryKind::Spherical, 0.05, 3.09));
        CHECK(sph.relation == Relation::Incomparable);
    }
}
