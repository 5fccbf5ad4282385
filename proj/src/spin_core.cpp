#include "spinerasure/spin_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinerasure {

namespace {

constexpr int kMaxTruncationCycles = 5'000'000;

}  // namespace

ErasureParams ErasureParams::from_gamma(double g, double p_init,
                                        double tail_tol) {
    ErasureParams params;
    params.g = g;
    params.alpha = alpha_from_gamma(g);
    params.p_init = p_init;
    params.tail_tol = tail_tol;
    params.validate();
    return params;
}

ErasureParams ErasureParams::from_alpha(double alpha, double p_init,
                                        double tail_tol) {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw std::domain_error(
            "alpha must be in (0, 0.5) for erasure parameters");
    }
    ErasureParams params;
    params.alpha = alpha;
    params.g = gamma_from_alpha(alpha);
    params.p_init = p_init;
    params.tail_tol = tail_tol;
    params.validate();
    return params;
}

double ErasureParams::r() const { return std::exp(-g); }

void ErasureParams::validate() const {
    if (!std::isfinite(g) || g <= 0.0) {
        throw std::domain_error("g must be finite and > 0");
    }
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw std::domain_error("alpha must be in (0, 0.5)");
    }
    if (std::fabs(alpha - alpha_from_gamma(g)) > 1e-12) {
        throw std::domain_error("g and alpha are inconsistent");
    }
    if (!(p_init >= 0.0 && p_init <= 1.0)) {
        throw std::domain_error("p_init must be in [0, 1]");
    }
    if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
        throw std::domain_error("tail_tol must be in (0, 1e-6]");
    }
}

double gamma_from_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        throw std::domain_error("alpha must be in (0, 1)");
    }
    return std::log((1.0 - alpha) / alpha);
}

double alpha_from_gamma(double g) {
    if (!std::isfinite(g)) {
        throw std::domain_error("g must be finite");
    }
    // 1/(1+e^g) = r/(1+r)
    return 1.0 / (1.0 + std::exp(g));
}

double q_up(int m, double g) {
    if (m < 1) {
        throw std::domain_error("cycle index m must be >= 1");
    }
    if (!std::isfinite(g) || g <= 0.0) {
        throw std::domain_error("g must be finite and > 0");
    }
    const double x = std::exp(-(double)(m + 1) * g);
    return x / (1.0 + x);
}

double vb_bound(double g) {
    if (!std::isfinite(g) || g <= 0.0) {
        throw std::domain_error("g must be finite and > 0");
    }
    return std::numbers::ln2 / g;
}

int truncation_cycles(const ErasureParams& params) {
    params.validate();
    const double one_minus_r = -std::expm1(-params.g);
    int m = 1;
    while (std::exp(-(double)(m + 2) * params.g) / one_minus_r >=
           params.tail_tol) {
        if (++m > kMaxTruncationCycles) {
            throw std::domain_error(
                "full-erasure truncation exceeds the cycle cap; g is too "
                "small for the requested tail_tol");
        }
    }
    return m;
}

double mean_spinlabor(const ErasureParams& params) {
    const int m_stop = truncation_cycles(params);
    double sum = params.p_init;
    for (int m = 1; m <= m_stop; ++m) {
        sum += q_up(m, params.g);
    }
    return sum;
}

double variance_spinlabor(const ErasureParams& params) {
    const int m_stop = truncation_cycles(params);
    double sum = params.p_init * (1.0 - params.p_init);
    for (int m = 1; m <= m_stop; ++m) {
        const double q = q_up(m, params.g);
        sum += q * (1.0 - q);
    }
    return sum;
}

double spintherm_from_spinlabor(double spinlabor, double p_init) {
    return -(spinlabor + p_init);
}

}  // namespace spinerasure
