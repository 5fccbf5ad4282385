#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "spinerasure/distribution.hpp"
#include "test_grids.hpp"

using namespace spinerasure;
constexpr double kLn2 = std::numbers::ln2;

namespace {

// Independent oracle: enumerate all 2^m cost outcomes with exact products
// of the increment probabilities.
std::vector<double> enumerate_pmf(const std::vector<double>& increments) {
    const int m = (int)increments.size();
    std::vector<double> pmf(m + 1, 0.0);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        double prob = 1.0;
        int cost = 0;
        for (int k = 0; k < m; ++k) {
            if (mask & (1ull << k)) {
                prob *= increments[k];
                ++cost;
            } else {
                prob *= 1.0 - increments[k];
            }
        }
        pmf[cost] += prob;
    }
    return pmf;
}

}  // namespace

TEST_CASE("bernoulli_increments") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    CHECK(bernoulli_increments(params, 1) == std::vector<double>{0.5});

    const std::vector<double> three = bernoulli_increments(params, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == 0.5);
    CHECK(three[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(three[2] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));

    const ErasureParams p0 = ErasureParams::from_gamma(kLn2, 0.0);
    const std::vector<double> two = bernoulli_increments(p0, 2);
    CHECK(two[0] == 0.0);
    CHECK(two[1] == doctest::Approx(0.2).epsilon(1e-15));

    CHECK_THROWS_AS((void)bernoulli_increments(params, 0), std::domain_error);
}

TEST_CASE("pmf_after_m_cycles small cases") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    const SpinlaborPmf one = pmf_after_m_cycles(params, 1);
    REQUIRE(one.probs.size() == 2);
    CHECK(one.probs[0] == 0.5);
    CHECK(one.probs[1] == 0.5);

    const SpinlaborPmf two = pmf_after_m_cycles(params, 2);
    REQUIRE(two.probs.size() == 3);
    CHECK(two.probs[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(two.probs[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(two.probs[2] == doctest::Approx(0.1).epsilon(1e-15));

    const ErasureParams p0 = ErasureParams::from_gamma(kLn2, 0.0);
    const SpinlaborPmf shifted = pmf_after_m_cycles(p0, 2);
    CHECK(shifted.probs[0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(shifted.probs[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(shifted.probs[2] == 0.0);
}

TEST_CASE("recurrence equals the brute-force enumeration oracle") {
    for (double g : {kLn2, kLn2 / 4.0, 0.3}) {
        for (double p : testgrids::p_grid()) {
            const ErasureParams params = ErasureParams::from_gamma(g, p);
            for (int m = 1; m <= 12; ++m) {
                const std::vector<double> oracle =
                    enumerate_pmf(bernoulli_increments(params, m));
                const SpinlaborPmf pmf = pmf_after_m_cycles(params, m);
                REQUIRE(pmf.probs.size() == oracle.size());
                for (std::size_t q = 0; q < oracle.size(); ++q) {
                    CHECK(std::fabs(pmf.probs[q] - oracle[q]) <= 1e-12);
                }
            }
        }
    }
    // one deep case
    const ErasureParams params = ErasureParams::from_gamma(kLn2, 0.5);
    const std::vector<double> oracle =
        enumerate_pmf(bernoulli_increments(params, 20));
    const SpinlaborPmf pmf = pmf_after_m_cycles(params, 20);
    for (std::size_t q = 0; q < oracle.size(); ++q) {
        CHECK(std::fabs(pmf.probs[q] - oracle[q]) <= 1e-12);
    }
}

TEST_CASE("grid properties: normalization, mean, variance, closed form") {
    for (double g : testgrids::g_grid()) {
        for (double p : testgrids::p_grid()) {
            const ErasureParams params = ErasureParams::from_gamma(g, p);
            double mean_expected = p;
            double var_expected = p * (1.0 - p);
            for (int m = 1; m <= 40; ++m) {
                const SpinlaborPmf pmf = pmf_after_m_cycles(params, m);
                pmf.validate();
                double total = 0.0;
                for (double prob : pmf.probs) {
                    total += prob;
                }
                CHECK(std::fabs(total - 1.0) <= 1e-12);
                CHECK(std::fabs(pmf.mean() - mean_expected) <= 1e-12);
                CHECK(std::fabs(pmf.variance() - var_expected) <= 1e-12);
                for (int q = 0; q <= m; ++q) {
                    CHECK(std::fabs(closed_form_pm(params, m, q) -
                                    pmf.probs[q]) <= 1e-12);
                }
                const double q_next = q_up(m, g);
                mean_expected += q_next;
                var_expected += q_next * (1.0 - q_next);
            }
        }
    }
}

TEST_CASE("closed_form_pm hand-expanded cases") {
    for (double p : testgrids::p_grid()) {
        const ErasureParams params = ErasureParams::from_gamma(kLn2, p);
        // m=2, q=1: (r^2(1-p) + p)/(1+r^2) with r = 1/2
        CHECK(closed_form_pm(params, 2, 1) ==
              doctest::Approx((0.25 * (1.0 - p) + p) / 1.25).epsilon(1e-14));
        // corrected q=0 branch
        CHECK(closed_form_pm(params, 2, 0) ==
              doctest::Approx((1.0 - p) / 1.25).epsilon(1e-14));
        // q=m: all increments fire
        const double all3 = p * q_up(1, kLn2) * q_up(2, kLn2);
        CHECK(closed_form_pm(params, 3, 3) ==
              doctest::Approx(all3).epsilon(1e-13));
    }
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    CHECK(closed_form_pm(params, 3, -1) == 0.0);
    CHECK(closed_form_pm(params, 3, 4) == 0.0);
    CHECK_THROWS_AS((void)closed_form_pm(params, 0, 0), std::domain_error);
}

TEST_CASE("pmf_full_erasure at g = ln2 reproduces the frozen oracle") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    const SpinlaborPmf pmf = pmf_full_erasure(params);
    pmf.validate();
    CHECK(pmf.converged);
    CHECK(pmf.tail_bound <= params.tail_tol);
    REQUIRE(pmf.probs.size() >= 5);
    // 60-digit oracle values
    CHECK(std::fabs(pmf.probs[0] - 0.3145668313463307) < 1e-13);
    CHECK(std::fabs(pmf.probs[1] - 0.47185024701949605) < 1e-13);
    CHECK(std::fabs(pmf.probs[2] - 0.18349731828535957) < 1e-13);
    CHECK(std::fabs(pmf.probs[3] - 0.028086324227350955) < 1e-13);
    CHECK(std::fabs(pmf.probs[4] - 0.001934835668995288) < 1e-13);
    CHECK(std::fabs(pmf.mean() - 0.93116644701511088) < 1e-10);
    CHECK(std::fabs(pmf.mean() - mean_spinlabor(params)) < 1e-10);
    CHECK(std::fabs(pmf.variance() - variance_spinlabor(params)) < 1e-10);
}

TEST_CASE("pmf_full_erasure in the frozen-reservoir limit") {
    const ErasureParams params = ErasureParams::from_gamma(20.0);
    const SpinlaborPmf pmf = pmf_full_erasure(params);
    REQUIRE(pmf.probs.size() >= 2);
    CHECK(pmf.probs[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(pmf.probs[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("full-erasure mean/variance match the summation formulas on the grid") {
    for (double g : testgrids::g_grid()) {
        for (double p : testgrids::p_grid()) {
            const ErasureParams params = ErasureParams::from_gamma(g, p);
            const SpinlaborPmf pmf = pmf_full_erasure(params);
            pmf.validate();
            CHECK(std::fabs(pmf.mean() - mean_spinlabor(params)) <= 1e-10);
            CHECK(std::fabs(pmf.variance() - variance_spinlabor(params)) <=
                  1e-10);
        }
    }
}

TEST_CASE("closed_form_full_half equals the convolution on the grid") {
    for (double g : testgrids::g_grid()) {
        const ErasureParams params = ErasureParams::from_gamma(g, 0.5);
        const SpinlaborPmf pmf = pmf_full_erasure(params);
        for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
            CHECK(std::fabs(closed_form_full_half(g, (int)q) -
                            pmf.probs[q]) <= 1e-10);
        }
    }
    CHECK(closed_form_full_half(kLn2, -2) == 0.0);
    CHECK_THROWS_AS((void)closed_form_full_half(0.0, 0), std::domain_error);
    CHECK_THROWS_AS((void)closed_form_full_half(-1.0, 0), std::domain_error);
}

TEST_CASE("closed_form_full_half frozen values and the P0/P1 ratio") {
    // prod_{k>=2}(1 + 2^-k) = 1.5894873526875811
    CHECK(std::fabs(closed_form_full_half(kLn2, 0) - 0.3145668313463307) <
          1e-13);
    CHECK(std::fabs(closed_form_full_half(kLn2, 1) - 0.47185024701949605) <
          1e-13);
    const double ratio =
        closed_form_full_half(kLn2, 0) / closed_form_full_half(kLn2, 1);
    CHECK(ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("pmf_exp_average") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    const SpinlaborPmf full = pmf_full_erasure(params);
    CHECK(pmf_exp_average(full, kLn2) == doctest::Approx(0.6).epsilon(1e-12));

    SpinlaborPmf point;
    point.g = kLn2;
    point.cycles = 0;
    point.probs = {1.0};
    CHECK(pmf_exp_average(point, kLn2) == 1.0);

    const SpinlaborPmf one = pmf_after_m_cycles(params, 1);
    CHECK(pmf_exp_average(one, kLn2) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("telescoping product of exponentiated increments") {
    for (double g : testgrids::g_grid()) {
        const ErasureParams params = ErasureParams::from_gamma(g, 0.5);
        const double w = std::exp(-g);
        double prod = 1.0;
        for (int m = 1; m <= truncation_cycles(params); ++m) {
            const double q = q_up(m, g);
            prod *= (1.0 - q) + q * w;
        }
        const double r2 = std::exp(-2.0 * g);
        CHECK(std::fabs(prod - 1.0 / (1.0 + r2)) <= 1e-12);
    }
}

TEST_CASE("shifted-weight recurrence does not satisfy the identities") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    const int cycles = truncation_cycles(params) + 1;
    const SpinlaborPmf corrected = pmf_after_m_cycles(params, cycles);
    const SpinlaborPmf shifted =
        pmf_after_m_cycles_shifted_weights(params, cycles);

    // both normalize, but their means differ by q_up(1) = 0.2
    CHECK(std::fabs(shifted.mean() - (corrected.mean() - 0.2)) <= 1e-10);

    const double rhs = (1.0 + 0.5) / (2.0 * 1.25);
    CHECK(std::fabs(pmf_exp_average(corrected, kLn2) - rhs) <= 1e-12);
    CHECK(std::fabs(pmf_exp_average(shifted, kLn2) - rhs) > 1e-2);

    // the closed form tracks the corrected recurrence only
    CHECK(std::fabs(closed_form_pm(params, 3, 1) -
                    pmf_after_m_cycles(params, 3).probs[1]) <= 1e-13);
    CHECK(std::fabs(closed_form_pm(params, 3, 1) -
                    pmf_after_m_cycles_shifted_weights(params, 3).probs[1]) >
          1e-3);
}

TEST_CASE("SpinlaborPmf::validate flags broken distributions") {
    const ErasureParams params = ErasureParams::from_gamma(kLn2);
    SpinlaborPmf pmf = pmf_after_m_cycles(params, 3);
    SpinlaborPmf negative = pmf;
    negative.probs[1] = -negative.probs[1];
    CHECK_THROWS_AS(negative.validate(), std::logic_error);
    SpinlaborPmf unnormalized = pmf;
    unnormalized.probs[0] += 0.25;
    CHECK_THROWS_AS(unnormalized.validate(), std::logic_error);
    SpinlaborPmf oversupport = pmf;
    oversupport.cycles = 1;
    CHECK_THROWS_AS(oversupport.validate(), std::logic_error);
}
