#include <doctest.h>

#include <random>
#include <tuple>

#include "rankgf/analysis.hpp"
#include "rankgf/genfunc.hpp"
#include "rankgf/search.hpp"

using namespace rankgf;

namespace {

// Random (m, ell, n) with m in [lo, hi] satisfying the exact witness conditions;
// ell is not restricted to the narrow search window.
std::tuple<std::int64_t, std::int64_t, std::int64_t> random_valid_triple(std::mt19937_64& rng, std::int64_t lo,
                                                                         std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> pick_m(lo, hi);
    while (true) {
        const std::int64_t m = pick_m(rng);
        const std::int64_t n_lo = (108 * m + 1) / 120 + 1;
        const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(n_lo + m + 2, 2 * m)(rng);
        const std::int64_t n_hi = ell - m - 2;
        if (n_lo > n_hi)
            continue;
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(n_lo, n_hi)(rng);
        if (witness_conditions_hold(witness_partition(m, n), 12 * (ell - 1)))
            return {m, ell, n};
    }
}

} // namespace

TEST_SUITE("search")
{
    TEST_CASE("quadratic values")
    {
        CHECK(coefficient_quadratics(1, 1, 1) == Quadratics{50, 52});
        CHECK(coefficient_quadratics(1200, 2399, 1173) == Quadratics{-2214, 24});
    }

    TEST_CASE("difference identity between neighbouring quadratics")
    {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<std::int64_t> v(-100000, 100000);
        for (int i = 0; i < 100; ++i) {
            const std::int64_t m = v(rng), ell = v(rng), n = v(rng);
            const BigInt lhs = coefficient_quadratics(m, ell, n - 1).g - coefficient_quadratics(m, ell, n).f;
            CHECK(lhs == -78 * (to_bigint(m) - to_bigint(n)) + 2 * to_bigint(m) - 42);
        }
    }

    TEST_CASE("quadratics match the series on valid configurations")
    {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 25; ++i) {
            const auto [m, ell, n] = random_valid_triple(rng, 40, 150);
            CAPTURE(m);
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(series_coefficients(witness_partition(m, n), 12 * (ell - 1)) == coefficient_quadratics(m, ell, n));
        }
    }

    TEST_CASE("witness conditions")
    {
        CHECK(witness_conditions_hold(Partition{14399, 14075, 14075, 14075}, 28776));
        CHECK_FALSE(witness_conditions_hold(Partition{14399, 14075, 14075}, 28776));
        CHECK_FALSE(witness_conditions_hold(Partition{14399, 14075, 14075, 14075}, 28777));
        CHECK_FALSE(witness_conditions_hold(Partition{14398, 14075, 14075, 14075}, 28776));
        CHECK(witness_partition(1200, 1173) == Partition{14399, 14075, 14075, 14075});
    }

    TEST_CASE("no witness for small m")
    {
        CHECK_FALSE(find_witness(10));
        CHECK_THROWS_AS(find_witness(0), std::invalid_argument);
    }

    TEST_CASE("witness at m = 1200 and its lift")
    {
        const auto w = find_witness(1200);
        REQUIRE(w);
        CHECK(w->lambda == Partition{14399, 14075, 14075, 14075});
        CHECK(w->N == 28776);
        CHECK(w->ell == 2399);
        CHECK(w->n == 1173);
        CHECK(w->f_value == -2214);
        CHECK(w->g_value == 24);
        CHECK(w->verified);
        CHECK(w->dip_index() == 28777);

        const auto g = rank_gf_formula(w->lambda, 1, static_cast<std::size_t>(w->N + 2));
        CHECK_FALSE(unimodality_report(g).unimodal);

        CHECK(lift_to_distinct(*w) == Partition{14402, 14077, 14076, 14075});

        Witness4 forged = *w;
        forged.f_value = 5;
        CHECK_THROWS_AS(lift_to_distinct(forged), VerificationError);
    }

    TEST_CASE("density counts")
    {
        CHECK(density_counts(1) == DensityCounts{0, 1});
        CHECK(density_counts(2) == DensityCounts{0, 5});
        std::uint64_t previous = 0;
        for (std::int64_t k = 1; k <= 8; ++k) {
            const DensityCounts c = density_counts(k);
            CHECK(c.total > previous);
            CHECK(c.nonunimodal <= c.total);
            previous = c.total;
        }
        CHECK(density_counts(8, 3) == density_counts(8, 1));
    }
}
