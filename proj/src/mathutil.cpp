#include "spinerasure/mathutil.hpp"

#include <cmath>
#include <stdexcept>

namespace spinerasure {

double regularized_gamma_q(double s, double x) {
    if (!(s > 0.0) || !(x >= 0.0)) {
        throw std::domain_error("gamma_q requires s > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    const double log_prefactor = -x + s * std::log(x) - std::lgamma(s);
    if (x < s + 1.0) {
        // lower series for P, then Q = 1 - P
        double ap = s;
        double term = 1.0 / s;
        double sum = term;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-17) {
                break;
            }
        }
        return 1.0 - sum * std::exp(log_prefactor);
    }
    // modified Lentz continued fraction for Q
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -(double)i * ((double)i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) {
            break;
        }
    }
    return std::exp(log_prefactor) * h;
}

double chi_squared_tail(double statistic, int dof) {
    if (dof < 1) {
        throw std::domain_error("dof must be >= 1");
    }
    if (!(statistic >= 0.0)) {
        throw std::domain_error("the chi-squared statistic must be >= 0");
    }
    return regularized_gamma_q((double)dof / 2.0, statistic / 2.0);
}

}  // namespace spinerasure
