#pragma once

#include <utility>
#include <vector>

#include "spinerasure/distribution.hpp"

// Fluctuation statistics of the erasure cost: the exponentiated-spinlabor
// identity, the probability of beating the erasure bound by epsilon, and
// the A / B / semi-analytic exponential bounds on that probability.

namespace spinerasure {

/// Violation-probability curve over an ascending epsilon grid, with the
/// per-epsilon bound values. bound_semi is populated only when g = ln2/b
/// for an integer b (then the VB bound sits on the integer cost grid).
struct ViolationCurve {
    double g = 0.0;
    std::vector<double> epsilons;
    std::vector<double> pr_violation;
    std::vector<double> bound_a;     ///< A e^(-g eps)
    std::vector<double> bound_b;     ///< B e^(-g eps)
    std::vector<double> bound_semi;  ///< C e^(-a eps); empty if g != ln2/b

    /// Throws std::logic_error if monotonicity or the bound chain fails.
    void validate() const;
};

/// Exponential fit C e^(-a eps) pinned to the violation probability at
/// eps = 0 and eps = 1 quantum, for g = ln2/b.
struct SemiAnalyticFit {
    int b = 0;
    double g = 0.0;
    double amplitude_c = 0.0;  ///< Pr_v(0)
    double decay_a = 0.0;      ///< ln(Pr_v(0)/Pr_v(1)) > 0
};

struct DecayStudyRow {
    int b = 0;
    double g = 0.0;
    double decay_a = 0.0;
    double decay_a_squared = 0.0;
};

/// Table of fitted decay rates per b plus trend diagnostics of the ratio
/// a^2/g over ascending b >= 2.
struct DecayStudy {
    std::vector<DecayStudyRow> rows;
    bool ratio_monotone_increasing = false;
    double final_ratio = 0.0;      ///< a^2/g at the largest b
    double final_ratio_gap = 0.0;  ///< |1 - final_ratio|
};

/// Grid point where an exponential bound fails to dominate Pr_v.
struct DominationCounterexample {
    double epsilon = 0.0;
    double bound_value = 0.0;
    double pr_value = 0.0;
};

/// Domination check of the fitted and the sqrt(g)-rate exponentials
/// against the violation probability on an epsilon grid.
struct DominationReport {
    int b = 0;
    /// fit C e^(-a eps) vs Pr_v for eps > 1
    std::vector<DominationCounterexample> fit_violations;
    /// C e^(-sqrt(g) eps) vs Pr_v for eps > 0
    std::vector<DominationCounterexample> sqrt_rate_violations;
};

/// (1+e^-g)/(2(1+e^-2g)): the closed form of <e^(-g L)> for p = 1/2.
double jarzynski_rhs(double g);

/// <e^(-g L)> evaluated from a converged full-erasure PMF with p = 1/2.
double jarzynski_lhs(const SpinlaborPmf& pmf);

/// The two factors of <e^(-g L)>: the first-CNOT average (1+r)/2 and the
/// telescoped remainder-of-protocol product -> 1/(1+r^2). Requires
/// p_init = 1/2.
std::pair<double, double> partial_exp_averages(const ErasureParams& params);

/// A = (1+e^-g)/(1+e^-2g) = 2 jarzynski_rhs(g).
double bound_a(double g);

/// B = 2 sum_{q <= ln2/g} pmf[q] e^(-g q); tighter than A.
double bound_b(const SpinlaborPmf& pmf);

/// Pr_v(eps) = P(spinlabor <= ln2/g - eps), inclusive boundary with a
/// 1e-12 snap so integer-grid sums at g = ln2/b are unambiguous.
double violation_probability(const SpinlaborPmf& pmf, double epsilon);

ViolationCurve violation_curve(const ErasureParams& params, double eps_max,
                               double eps_step);

/// Default grid: 0 to ceil(ln2/g)+2 in steps of 0.1 quanta.
ViolationCurve violation_curve(const ErasureParams& params);

/// Fit at g = ln2/b. The ratio Pr_v(0)/P(b) is computed both from the PMF
/// and from the ratio-product formulas; they must agree within 1e-9.
SemiAnalyticFit semi_analytic_fit(int b, double tail_tol = 1e-14);

/// P(b-n)/P(b) of the full-erasure PMF at g = ln2/b (so r^b = 1/2),
/// in product form. n must lie in [0, b].
double ratio_term(int b, int n);

/// sum_{n=0}^{b} ratio_term(b, n) = Pr_v(0)/P(b).
double ratio_sum(int b);

DecayStudy decay_limit_study(const std::vector<int>& b_list,
                             double tail_tol = 1e-14);

DominationReport check_semi_analytic_domination(int b, double eps_step = 0.1,
                                                double tail_tol = 1e-14);

}  // namespace spinerasure
