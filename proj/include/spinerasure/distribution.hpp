#pragma once

#include <vector>

#include "spinerasure/spin_core.hpp"

// Exact spinlabor probability mass functions. The cost of an m-cycle run is
// a sum of independent Bernoulli increments [p, Q(1), ..., Q(m-1)] with
// Q(k) = q_up(k, g), i.e. a Poisson-binomial distribution over integer
// quanta of hbar.

namespace spinerasure {

struct SpinlaborPmf {
    double g = 0.0;
    double p_init = 0.5;
    int cycles = 0;           ///< number of Bernoulli increments convolved
    bool converged = false;   ///< true for a full-erasure (truncated) PMF
    double tail_bound = 0.0;  ///< bound on probability mass outside `probs`
    std::vector<double> probs;  ///< probs[q] = P(spinlabor = q quanta)

    double mean() const;
    double variance() const;

    /// Throws std::logic_error when normalization or support is broken.
    void validate() const;
};

/// The m Bernoulli success probabilities [p, q_up(1), ..., q_up(m-1)].
std::vector<double> bernoulli_increments(const ErasureParams& params,
                                         int cycles);

/// Exact convolution of bernoulli_increments; support {0..cycles}.
SpinlaborPmf pmf_after_m_cycles(const ErasureParams& params, int cycles);

/// Full-erasure PMF: the convolution run to the truncation cycle count,
/// trimmed of negligible tail entries; all discarded mass is accounted for
/// in tail_bound (< tail_tol).
SpinlaborPmf pmf_full_erasure(const ErasureParams& params);

/// Closed-form P_m(q) for arbitrary p. Equals the convolution elementwise.
/// Returns 0 outside the support {0..cycles}.
double closed_form_pm(const ErasureParams& params, int cycles, int q);

/// Closed-form full-erasure P(q) for p = 1/2, normalized so the
/// distribution sums to 1. Infinite products are truncated at tail_tol.
double closed_form_full_half(double g, int q, double tail_tol = 1e-14);

/// Average exponentiated spinlabor sum_q pmf[q] e^(-g q).
double pmf_exp_average(const SpinlaborPmf& pmf, double g);

/// Comparison variant that advances cycle m with the weight of cycle m+1,
/// i.e. increments [p, q_up(2), ..., q_up(m)]. It does not reproduce the
/// closed form or the exponentiated-average identity; kept so the
/// difference can be demonstrated.
SpinlaborPmf pmf_after_m_cycles_shifted_weights(const ErasureParams& params,
                                                int cycles);

}  // namespace spinerasure
