#include "spinerasure/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace spinerasure {

namespace {

// In-place Poisson-binomial convolution of Bernoulli(q) increments.
std::vector<double> convolve_bernoulli(const std::vector<double>& increments) {
    std::vector<double> pmf{1.0};
    pmf.reserve(increments.size() + 1);
    for (double q : increments) {
        pmf.push_back(q * pmf.back());
        for (std::size_t n = pmf.size() - 2; n >= 1; --n) {
            pmf[n] = (1.0 - q) * pmf[n] + q * pmf[n - 1];
        }
        pmf[0] *= (1.0 - q);
    }
    return pmf;
}

}  // namespace

double SpinlaborPmf::mean() const {
    double sum = 0.0;
    for (std::size_t q = 1; q < probs.size(); ++q) {
        sum += (double)q * probs[q];
    }
    return sum;
}

double SpinlaborPmf::variance() const {
    const double mu = mean();
    double sum = 0.0;
    for (std::size_t q = 0; q < probs.size(); ++q) {
        const double d = (double)q - mu;
        sum += d * d * probs[q];
    }
    return sum;
}

void SpinlaborPmf::validate() const {
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw std::logic_error("spinlabor PMF has a negative entry");
        }
        total += p;
    }
    if (total < 1.0 - tail_bound - 1e-12 || total > 1.0 + 1e-12) {
        throw std::logic_error("spinlabor PMF is not normalized");
    }
    if ((int)probs.size() > cycles + 1) {
        throw std::logic_error("spinlabor PMF support exceeds the cycle count");
    }
}

std::vector<double> bernoulli_increments(const ErasureParams& params,
                                         int cycles) {
    params.validate();
    if (cycles < 1) {
        throw std::domain_error("cycle count must be >= 1");
    }
    std::vector<double> incs;
    incs.reserve(cycles);
    incs.push_back(params.p_init);
    for (int m = 1; m < cycles; ++m) {
        incs.push_back(q_up(m, params.g));
    }
    return incs;
}

SpinlaborPmf pmf_after_m_cycles(const ErasureParams& params, int cycles) {
    SpinlaborPmf pmf;
    pmf.g = params.g;
    pmf.p_init = params.p_init;
    pmf.cycles = cycles;
    pmf.probs = convolve_bernoulli(bernoulli_increments(params, cycles));
    return pmf;
}

SpinlaborPmf pmf_full_erasure(const ErasureParams& params) {
    const int m_stop = truncation_cycles(params);
    SpinlaborPmf pmf = pmf_after_m_cycles(params, m_stop + 1);
    pmf.converged = true;
    // residual increments q_up(m) for m > m_stop move at most this much mass
    const double one_minus_r = -std::expm1(-params.g);
    pmf.tail_bound =
        std::exp(-(double)(m_stop + 2) * params.g) / one_minus_r;
    // trim entries below tail_tol/100; account for every cut in tail_bound
    std::size_t last = pmf.probs.size();
    while (last > 1 && pmf.probs[last - 1] <= params.tail_tol * 1e-2) {
        --last;
    }
    for (std::size_t q = last; q < pmf.probs.size(); ++q) {
        pmf.tail_bound += pmf.probs[q];
    }
    pmf.probs.resize(last);
    return pmf;
}

double closed_form_pm(const ErasureParams& params, int cycles, int q) {
    params.validate();
    if (cycles < 1) {
        throw std::domain_error("cycle count must be >= 1");
    }
    if (q < 0 || q > cycles) {
        return 0.0;
    }
    const double g = params.g;
    const double p = params.p_init;
    double denom = 1.0;  // prod_{k=2}^{m} (1 + r^k)
    for (int k = 2; k <= cycles; ++k) {
        denom *= 1.0 + std::exp(-(double)k * g);
    }
    if (q == 0) {
        return (1.0 - p) / denom;
    }
    // P_m(q) = [(1-p) prod_{j=1}^{q} c_j + p prod_{j=1}^{q-1} c_j] / denom
    // with c_j = (r^(j+1) - r^(m+1)) / (1 - r^j); the second product is the
    // first with the j=q factor's vanishing numerator cancelled.
    double prod = 1.0;
    double prod_all_but_last = 1.0;
    for (int j = 1; j <= q; ++j) {
        if (j == q) {
            prod_all_but_last = prod;
        }
        const double c = std::exp(-(double)(j + 1) * g) *
                         std::expm1(-(double)(cycles - j) * g) /
                         std::expm1(-(double)j * g);
        prod *= c;
    }
    return ((1.0 - p) * prod + p * prod_all_but_last) / denom;
}

double closed_form_full_half(double g, int q, double tail_tol) {
    if (!std::isfinite(g) || g <= 0.0) {
        throw std::domain_error("g must be finite and > 0");
    }
    if (q < 0) {
        return 0.0;
    }
    const double one_minus_r = -std::expm1(-g);
    // log prod_{k>=2} (1 + r^k), truncated once the remaining log-mass
    // r^k/(1-r) is negligible
    double log_denom = 0.0;
    for (int k = 2;; ++k) {
        const double rk = std::exp(-(double)k * g);
        if (rk / one_minus_r < tail_tol * 1e-2) {
            break;
        }
        log_denom += std::log1p(rk);
        if (k > 50'000'000) {
            throw std::domain_error("closed-form product does not converge");
        }
    }
    if (q == 0) {
        return 0.5 * std::exp(-log_denom);
    }
    double log_t = 0.0;  // log prod_{j=1}^{q} r^j/(1-r^j)
    for (int j = 1; j <= q; ++j) {
        log_t += -(double)j * g - std::log(-std::expm1(-(double)j * g));
    }
    const double rq = std::exp(-(double)q * g);
    const double log_factor = std::log(1.0 - rq * one_minus_r) + g;
    return 0.5 * std::exp(log_t + log_factor - log_denom);
}

double pmf_exp_average(const SpinlaborPmf& pmf, double g) {
    double sum = 0.0;
    for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
        sum += pmf.probs[q] * std::exp(-g * (double)q);
    }
    return sum;
}

SpinlaborPmf pmf_after_m_cycles_shifted_weights(const ErasureParams& params,
                                                int cycles) {
    params.validate();
    if (cycles < 1) {
        throw std::domain_error("cycle count must be >= 1");
    }
    std::vector<double> incs;
    incs.reserve(cycles);
    incs.push_back(params.p_init);
    for (int m = 2; m <= cycles; ++m) {
        incs.push_back(q_up(m, params.g));
    }
    SpinlaborPmf pmf;
    pmf.g = params.g;
    pmf.p_init = params.p_init;
    pmf.cycles = cycles;
    pmf.probs = convolve_bernoulli(incs);
    return pmf;
}

}  // namespace spinerasure
