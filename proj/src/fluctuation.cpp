#include "spinerasure/fluctuation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinerasure {

namespace {

constexpr double kBoundarySnap = 1e-12;

void require_full_erasure_half(const SpinlaborPmf& pmf) {
    if (!pmf.converged) {
        throw std::invalid_argument("a converged full-erasure PMF is required");
    }
    if (std::fabs(pmf.p_init - 0.5) > 1e-12) {
        throw std::invalid_argument("p_init = 1/2 is required");
    }
}

}  // namespace

void ViolationCurve::validate() const {
    const std::size_t n = epsilons.size();
    if (pr_violation.size() != n || bound_a.size() != n ||
        bound_b.size() != n ||
        (!bound_semi.empty() && bound_semi.size() != n)) {
        throw std::logic_error("violation curve columns have unequal length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double pr = pr_violation[i];
        if (!(pr >= 0.0 && pr <= 1.0)) {
            throw std::logic_error("violation probability outside [0, 1]");
        }
        if (i > 0 && pr > pr_violation[i - 1] + kBoundarySnap) {
            throw std::logic_error("violation probability not nonincreasing");
        }
        if (bound_b[i] > bound_a[i] + kBoundarySnap) {
            throw std::logic_error("bound B exceeds bound A");
        }
        if (pr > bound_b[i] + kBoundarySnap) {
            throw std::logic_error("violation probability exceeds bound B");
        }
    }
}

double jarzynski_rhs(double g) {
    if (!std::isfinite(g)) {
        throw std::domain_error("g must be finite");
    }
    return (1.0 + std::exp(-g)) / (2.0 * (1.0 + std::exp(-2.0 * g)));
}

double jarzynski_lhs(const SpinlaborPmf& pmf) {
    require_full_erasure_half(pmf);
    return pmf_exp_average(pmf, pmf.g);
}

std::pair<double, double> partial_exp_averages(const ErasureParams& params) {
    params.validate();
    if (std::fabs(params.p_init - 0.5) > 1e-12) {
        throw std::invalid_argument("p_init = 1/2 is required");
    }
    const double r = params.r();
    const double first = (1.0 + r) / 2.0;
    const double w = std::exp(-params.g);
    double rest = 1.0;
    const int m_stop = truncation_cycles(params);
    for (int m = 1; m <= m_stop; ++m) {
        const double q = q_up(m, params.g);
        rest *= (1.0 - q) + q * w;
    }
    return {first, rest};
}

double bound_a(double g) {
    if (!std::isfinite(g) || g <= 0.0) {
        throw std::domain_error("g must be finite and > 0");
    }
    return (1.0 + std::exp(-g)) / (1.0 + std::exp(-2.0 * g));
}

double bound_b(const SpinlaborPmf& pmf) {
    if (!pmf.converged) {
        throw std::invalid_argument("a converged full-erasure PMF is required");
    }
    const double limit = std::numbers::ln2 / pmf.g + kBoundarySnap;
    double sum = 0.0;
    for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
        if ((double)q > limit) {
            break;
        }
        sum += pmf.probs[q] * std::exp(-pmf.g * (double)q);
    }
    return 2.0 * sum;
}

double violation_probability(const SpinlaborPmf& pmf, double epsilon) {
    if (!(epsilon >= 0.0)) {
        throw std::domain_error("epsilon must be >= 0");
    }
    if (!pmf.converged) {
        throw std::invalid_argument("a converged full-erasure PMF is required");
    }
    const double limit = std::numbers::ln2 / pmf.g - epsilon + kBoundarySnap;
    double sum = 0.0;
    for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
        if ((double)q > limit) {
            break;
        }
        sum += pmf.probs[q];
    }
    return sum;
}

namespace {

// b >= 1 such that g = ln2/b within 1e-9, or 0 when there is none.
int special_b(double g) {
    const double b_real = std::numbers::ln2 / g;
    const int b = (int)std::lround(b_real);
    if (b >= 1 && std::fabs(b_real - (double)b) <= 1e-9) {
        return b;
    }
    return 0;
}

}  // namespace

ViolationCurve violation_curve(const ErasureParams& params, double eps_max,
                               double eps_step) {
    params.validate();
    if (std::fabs(params.p_init - 0.5) > 1e-12) {
        throw std::invalid_argument("p_init = 1/2 is required");
    }
    if (!(eps_step > 0.0) || !(eps_max >= 0.0)) {
        throw std::domain_error("epsilon grid must have eps_max >= 0 and "
                                "eps_step > 0");
    }
    const SpinlaborPmf pmf = pmf_full_erasure(params);
    const double a_val = bound_a(params.g);
    const double b_val = bound_b(pmf);
    const int b = special_b(params.g);
    SemiAnalyticFit fit;
    if (b > 0) {
        fit = semi_analytic_fit(b, params.tail_tol);
    }

    ViolationCurve curve;
    curve.g = params.g;
    for (int i = 0;; ++i) {
        const double eps = (double)i * eps_step;
        if (eps > eps_max + kBoundarySnap) {
            break;
        }
        curve.epsilons.push_back(eps);
        curve.pr_violation.push_back(violation_probability(pmf, eps));
        curve.bound_a.push_back(a_val * std::exp(-params.g * eps));
        curve.bound_b.push_back(b_val * std::exp(-params.g * eps));
        if (b > 0) {
            curve.bound_semi.push_back(fit.amplitude_c *
                                       std::exp(-fit.decay_a * eps));
        }
    }
    curve.validate();
    return curve;
}

ViolationCurve violation_curve(const ErasureParams& params) {
    const double eps_max = std::ceil(vb_bound(params.g)) + 2.0;
    return violation_curve(params, eps_max, 0.1);
}

double ratio_term(int b, int n) {
    if (b < 1) {
        throw std::domain_error("b must be >= 1");
    }
    if (n < 0 || n > b) {
        throw std::domain_error("n must be in [0, b]");
    }
    if (n == 0) {
        return 1.0;
    }
    const double g = std::numbers::ln2 / (double)b;  // r^b = 1/2
    const double r = std::exp(-g);
    double prefix = 1.0;
    for (int j = 1; j < n; ++j) {
        prefix *= 2.0 * std::exp(-(double)j * g) - 1.0;
    }
    if (n == b) {
        return prefix * 2.0 * r / (1.0 + r);
    }
    const double one_minus_r = -std::expm1(-g);
    return prefix * (2.0 - std::exp((double)n * g) * one_minus_r) / (1.0 + r);
}

double ratio_sum(int b) {
    double sum = 0.0;
    for (int n = 0; n <= b; ++n) {
        sum += ratio_term(b, n);
    }
    return sum;
}

SemiAnalyticFit semi_analytic_fit(int b, double tail_tol) {
    if (b < 1) {
        throw std::domain_error("b must be >= 1");
    }
    const double g = std::numbers::ln2 / (double)b;
    const ErasureParams params = ErasureParams::from_gamma(g, 0.5, tail_tol);
    const SpinlaborPmf pmf = pmf_full_erasure(params);
    const double pr0 = violation_probability(pmf, 0.0);
    const double pr1 = violation_probability(pmf, 1.0);
    if ((int)pmf.probs.size() <= b) {
        throw std::logic_error("full-erasure PMF lacks the q = b entry");
    }
    const double ratio_from_pmf = pr0 / pmf.probs[b];
    const double ratio_from_products = ratio_sum(b);
    if (std::fabs(ratio_from_pmf - ratio_from_products) > 1e-9) {
        throw std::logic_error(
            "PMF and product routes to Pr_v(0)/P(b) disagree");
    }
    SemiAnalyticFit fit;
    fit.b = b;
    fit.g = g;
    fit.amplitude_c = pr0;
    fit.decay_a = std::log(pr0 / pr1);
    return fit;
}

DecayStudy decay_limit_study(const std::vector<int>& b_list, double tail_tol) {
    DecayStudy study;
    for (int b : b_list) {
        const SemiAnalyticFit fit = semi_analytic_fit(b, tail_tol);
        study.rows.push_back(
            {b, fit.g, fit.decay_a, fit.decay_a * fit.decay_a});
    }
    study.ratio_monotone_increasing = true;
    double previous = 0.0;
    bool have_previous = false;
    for (const DecayStudyRow& row : study.rows) {
        if (row.b < 2) {
            continue;
        }
        const double ratio = row.decay_a_squared / row.g;
        if (have_previous && ratio <= previous) {
            study.ratio_monotone_increasing = false;
        }
        previous = ratio;
        have_previous = true;
        study.final_ratio = ratio;
        study.final_ratio_gap = std::fabs(1.0 - ratio);
    }
    return study;
}

DominationReport check_semi_analytic_domination(int b, double eps_step,
                                                double tail_tol) {
    const SemiAnalyticFit fit = semi_analytic_fit(b, tail_tol);
    const ErasureParams params =
        ErasureParams::from_gamma(fit.g, 0.5, tail_tol);
    const SpinlaborPmf pmf = pmf_full_erasure(params);
    const double sqrt_rate = std::sqrt(fit.g);
    const double eps_max = (double)b + 2.0;

    DominationReport report;
    report.b = b;
    for (int i = 1;; ++i) {
        const double eps = (double)i * eps_step;
        if (eps > eps_max + kBoundarySnap) {
            break;
        }
        const double pr = violation_probability(pmf, eps);
        const double fit_value =
            fit.amplitude_c * std::exp(-fit.decay_a * eps);
        const double sqrt_value =
            fit.amplitude_c * std::exp(-sqrt_rate * eps);
        if (eps > 1.0 + kBoundarySnap && fit_value < pr - kBoundarySnap) {
            report.fit_violations.push_back({eps, fit_value, pr});
        }
        if (sqrt_value < pr - kBoundarySnap) {
            report.sqrt_rate_violations.push_back({eps, sqrt_value, pr});
        }
    }
    return report;
}

}  // namespace spinerasure
