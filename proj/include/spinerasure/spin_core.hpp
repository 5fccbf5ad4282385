#pragma once

#include <cstdint>

// Core quantities of the Vaccaro-Barnett spin-reservoir erasure protocol.
//
// Conventions used throughout the library:
//   * hbar = 1; spin angular momentum is reported in quanta of hbar.
//   * The single protocol parameter is the dimensionless inverse spin
//     temperature g = gamma*hbar, with r = e^-g and polarization
//     alpha = r/(1+r).
//   * Exact per-trajectory bookkeeping uses integer half-quanta so the
//     first-law identity can be checked without tolerances.

namespace spinerasure {

/// Protocol configuration. `g` and `alpha` are kept mutually consistent;
/// construct through from_gamma() or from_alpha().
struct ErasureParams {
    double g = 0.0;            ///< dimensionless inverse spin temperature, > 0
    double alpha = 0.0;        ///< reservoir up fraction, in (0, 1/2)
    double p_init = 0.5;       ///< initial probability the memory spin is up
    double tail_tol = 1e-14;   ///< truncation tolerance for infinite sums

    static ErasureParams from_gamma(double g, double p_init = 0.5,
                                    double tail_tol = 1e-14);
    static ErasureParams from_alpha(double alpha, double p_init = 0.5,
                                    double tail_tol = 1e-14);

    /// e^-g
    double r() const;

    /// Throws std::domain_error if any invariant is broken.
    void validate() const;
};

/// Spin-angular-momentum ledger for one erasure run, in integer half-quanta.
/// The identity delta = labor + therm holds exactly for every trajectory.
struct FirstLawLedger {
    std::int64_t spinlabor_halfquanta = 0;  ///< deterministic CNOT cost, even
    std::int64_t spintherm_halfquanta = 0;  ///< equilibration exchange
    std::int64_t delta_jz_memory_ancilla_halfquanta = 0;

    bool balanced() const {
        return delta_jz_memory_ancilla_halfquanta ==
               spinlabor_halfquanta + spintherm_halfquanta;
    }
};

/// g = ln((1-alpha)/alpha); accepts any alpha in (0, 1).
double gamma_from_alpha(double alpha);

/// alpha = 1/(1+e^g); accepts any finite g.
double alpha_from_gamma(double g);

/// Probability that the memory-ancilla block is spin-up after the m-th
/// equilibration: r^(m+1)/(1+r^(m+1)). Requires m >= 1 and g > 0.
double q_up(int m, double g);

/// Erasure cost lower bound ln2/g, in quanta of hbar.
double vb_bound(double g);

/// Smallest m >= 1 with r^(m+2)/(1-r) < tail_tol: past this cycle the
/// remaining per-cycle up-probabilities sum to less than tail_tol.
int truncation_cycles(const ErasureParams& params);

/// Mean spinlabor of a full erasure: p_init + sum_{m>=1} q_up(m).
double mean_spinlabor(const ErasureParams& params);

/// Variance of the full-erasure spinlabor:
/// p(1-p) + sum_{m>=1} q_up(m)(1 - q_up(m)).
double variance_spinlabor(const ErasureParams& params);

/// Mean spintherm absorbed by the memory-ancilla system during a full
/// erasure, -(spinlabor + p_init); negative means removed from it.
double spintherm_from_spinlabor(double spinlabor, double p_init);

}  // namespace spinerasure
