#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trigon/certify.hpp"
#include "trigon/interval.hpp"
#include "trigon/jet.hpp"
#include "trigon/terms.hpp"

using namespace trigon;

TEST_SUITE("interval") {
    TEST_CASE("transcendental examples") {
        const Interval z = interval_transcendental(Transcendental::Sinh, Interval(0.0));
        CHECK(z.lo == 0);
        CHECK(z.hi == 0);
        const Interval s = interval_transcendental(Transcendental::Sin, Interval(0.0, std::numbers::pi));
        CHECK(s.lo <= 0);
        CHECK(s.lo > -1e-15);
        CHECK(s.hi >= 1);
        const Interval m = interval_transcendental(Transcendental::Sin, Interval(1.4, 1.8));
        CHECK(m.hi >= 1);
        CHECK(m.lo <= std::min(std::sin(1.4), std::sin(1.8)));
        CHECK(m.lo > std::min(std::sin(1.4), std::sin(1.8)) - 1e-14);
        CHECK_THROWS_AS(interval_transcendental(Transcendental::Sin, Interval(-0.5, 1)), Error);
        CHECK_THROWS_AS(interval_transcendental(Transcendental::Sin, Interval(6, 7)), Error);
    }

    TEST_CASE("elementary enclosures contain sampled images") {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> u(-5, 5), t(0, 1);
        for (int n = 0; n < 20000; ++n) {
            double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
            const Interval x(std::min(a, b), std::max(a, b)), y(std::min(c, d), std::max(c, d));
            const double px = x.lo + t(rng) * x.width(), py = y.lo + t(rng) * y.width();
            CHECK((x + y).contains(px + py));
            CHECK((x - y).contains(px - py));
            CHECK((x * y).contains(px * py));
            CHECK(sqr(x).contains(px * px));
            CHECK(sin(x).contains(std::sin(px)));
            CHECK(cos(x).contains(std::cos(px)));
            CHECK(sinh(x).contains(std::sinh(px)));
            CHECK(cosh(x).contains(std::cosh(px)));
            if (!y.contains_zero()) CHECK((x / y).contains(px / py));
            else CHECK_THROWS_AS(x / y, Error);
        }
    }

    TEST_CASE("jet derivatives match finite differences") {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.6, 1.4);
        for (auto kind : kAllGeometries)
            for (auto term : {TermKind::EulerRatio, TermKind::CubicSum, TermKind::CyclicMinusOne,
                              TermKind::ThirdSym, TermKind::UnifiedMiddle, TermKind::ProductOverFour}) {
                const double p[3] = {u(rng), u(rng), u(rng)};
                using DJ = Jet<double>;
                const DJ f = term_value_generic<DJ>(term, kind, DJ::variable(p[0], 0), DJ::variable(p[1], 1),
                                                    DJ::variable(p[2], 2));
                auto val = [&](double a, double b, double c) { return term_value_generic<double>(term, kind, a, b, c); };
                CHECK(f.v == doctest::Approx(val(p[0], p[1], p[2])).epsilon(1e-14));
                const double h = 1e-5;
                for (int i = 0; i < 3; ++i) {
                    double q[3] = {p[0], p[1], p[2]}, r[3] = {p[0], p[1], p[2]};
                    q[i] += h;
                    r[i] -= h;
                    const double fd = (val(q[0], q[1], q[2]) - val(r[0], r[1], r[2])) / (2 * h);
                    CHECK(f.g[i] == doctest::Approx(fd).epsilon(1e-6));
                    for (int j = 0; j < 3; ++j) {
                        double pp[3] = {p[0], p[1], p[2]}, pm[3] = {p[0], p[1], p[2]}, mp[3] = {p[0], p[1], p[2]},
                               mm[3] = {p[0], p[1], p[2]};
                        pp[i] += h, pp[j] += h, pm[i] += h, pm[j] -= h, mp[i] -= h, mp[j] += h, mm[i] -= h, mm[j] -= h;
                        const double fdd = (val(pp[0], pp[1], pp[2]) - val(pm[0], pm[1], pm[2]) -
                                            val(mp[0], mp[1], mp[2]) + val(mm[0], mm[1], mm[2])) /
                                           (4 * h * h);
                        CHECK(f.hess(i, j) == doctest::Approx(fdd).epsilon(1e-4).scale(1));
                    }
                }
            }
    }

    TEST_CASE("interval jet encloses point jets") {
        std::mt19937_64 rng(43);
        std::uniform_real_distribution<double> u(0.8, 1.2), t(0, 1);
        using IJ = Jet<Interval>;
        using DJ = Jet<double>;
        for (int n = 0; n < 500; ++n) {
            Interval s[3];
            for (auto& side : s) {
                const double lo = u(rng);
                side = {lo, lo + 0.05 * t(rng)};
            }
            const IJ f = term_value_generic<IJ>(TermKind::UnifiedMiddle, GeometryKind::Hyperbolic,
                                                IJ::variable(s[0], 0), IJ::variable(s[1], 1), IJ::variable(s[2], 2));
            const double p[3] = {s[0].lo + t(rng) * s[0].width(), s[1].lo + t(rng) * s[1].width(),
                                 s[2].lo + t(rng) * s[2].width()};
            const DJ g = term_value_generic<DJ>(TermKind::UnifiedMiddle, GeometryKind::Hyperbolic,
                                                DJ::variable(p[0], 0), DJ::variable(p[1], 1), DJ::variable(p[2], 2));
            CHECK(f.v.contains(g.v));
            for (int i = 0; i < 3; ++i) CHECK(f.g[i].contains(g.g[i]));
            for (int k = 0; k < 6; ++k) CHECK(f.h[k].contains(g.h[k]));
        }
    }
}
