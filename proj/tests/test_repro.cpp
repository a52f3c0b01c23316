#include <doctest.h>

#include "trigon/repro.hpp"

using namespace trigon;

TEST_SUITE("repro") {
    TEST_CASE("half ulp of the printed digit") {
        CHECK(half_ulp_of_printed("-0.00923") == doctest::Approx(5e-6));
        CHECK(half_ulp_of_printed("0.037107") == doctest::Approx(5e-7));
        CHECK(half_ulp_of_printed("-0.0457201") == doctest::Approx(5e-8));
        CHECK(half_ulp_of_printed("12") == 0.5);
    }

    TEST_CASE("computed gaps match high-precision references") {
        // From tests/reference/gen_reference.py (mpmath, 50 digits); the
        // quantities are the literal term differences of each row.
        const double reference[] = {-0.0092320845363190034, -1.2566924362461435, 0.19775335874719584,
                                    0.0041765446950801446, -0.013479056480751838, 0.2355722286114837};
        const auto rows = run_repro();
        REQUIRE(rows.size() == 6);
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(std::abs(rows[k].computed - reference[k]) <= 1e-13 * std::max(1.0, std::abs(reference[k])));
    }

    TEST_CASE("rows that match their printed values") {
        const auto rows = run_repro();
        CHECK(rows[0].pass);
        CHECK(rows[2].pass);
        CHECK(rows[3].pass);
        CHECK(rows[5].pass);
        CHECK_FALSE(rows[2].realizable);  // perimeter 7.5 is not a unit-sphere triangle
        CHECK(rows[0].realizable);
    }

    TEST_CASE("tampered value fails") {
        auto specs = reference_values();
        for (auto& s : specs) {
            const double v = std::stod(s.printed_value) + 1e-3;
            s.printed_value = std::to_string(v);
            s.printed_value.resize(s.printed_value.find('.') + 8);
        }
        for (const auto& row : run_repro(specs)) CHECK_FALSE(row.pass);
    }
}
