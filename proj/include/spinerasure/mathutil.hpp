#pragma once

namespace spinerasure {

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x)/Gamma(s),
/// s > 0, x >= 0. Series for x < s+1, Lentz continued fraction otherwise.
double regularized_gamma_q(double s, double x);

/// Upper tail P(X >= statistic) of a chi-squared variable with dof degrees
/// of freedom: Q(dof/2, statistic/2).
double chi_squared_tail(double statistic, int dof);

}  // namespace spinerasure
