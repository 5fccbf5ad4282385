#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spinerasure/distribution.hpp"

// Stochastic simulation of the erasure protocol. Trajectories are sampled
// from deterministic substreams of a master seed, so ensembles are
// bit-reproducible regardless of thread count or merge order.

namespace spinerasure {

/// SplitMix64: 64-bit-state generator over the Weyl sequence
/// s += 0x9E3779B97F4A7C15 with a murmur-style output finalizer.
/// Substream i of a master seed starts at mix(master + (i+1)*GOLDEN), which
/// fully pins the sampling contract across implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    static std::uint64_t substream_seed(std::uint64_t master,
                                        std::uint64_t index) {
        std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

enum class Spin : std::uint8_t { down = 0, up = 1 };

struct CycleOutcome {
    std::uint8_t cnot_cost_quanta = 0;  ///< 1 iff the block was up at the CNOT
    Spin pre_equilibration = Spin::down;
    Spin post_equilibration = Spin::down;
};

/// Termination rule for a trajectory: a fixed cycle count, or run until
/// q_up(m) drops below a threshold. Exactly one must be set.
struct StopRule {
    std::optional<int> max_cycles;
    std::optional<double> qup_threshold;

    static StopRule cycles(int n);
    static StopRule threshold(double t);
    void validate() const;
};

struct TrajectoryRecord {
    std::uint64_t seed = 0;
    int cycles_run = 0;
    bool erased = false;  ///< final block spin is down
    std::vector<CycleOutcome> per_cycle;
    FirstLawLedger ledger;
};

/// One erasure run. The initial memory spin is Bernoulli(p_init); cycle m
/// applies a CNOT (cost 1 quantum iff the block is up) and then resamples
/// the aligned (m+1)-spin block to up with probability q_up(m).
/// Defaults to StopRule::threshold(params.tail_tol).
TrajectoryRecord simulate_trajectory(const ErasureParams& params,
                                     std::uint64_t seed);
TrajectoryRecord simulate_trajectory(const ErasureParams& params,
                                     std::uint64_t seed,
                                     const StopRule& stop);

/// Order-independent ensemble statistics. All accumulators are exact
/// integer sums, so merges commute and results are bit-stable.
struct EnsembleSummary {
    double g = 0.0;
    double p_init = 0.5;
    std::uint64_t n_samples = 0;
    std::uint64_t n_unfinished = 0;  ///< trajectories still up at stop
    std::uint64_t n_ledger_violations = 0;  ///< trajectories whose first-law
                                            ///< identity failed to balance

    std::map<int, std::uint64_t> spinlabor_counts;  ///< quanta -> count
    std::int64_t sum_spintherm_halfquanta = 0;
    std::int64_t sum_spintherm_sq_halfquanta = 0;
    std::int64_t sum_delta_jz_halfquanta = 0;
    std::int64_t sum_delta_jz_sq_halfquanta = 0;

    // derived statistics, filled by finalize()
    double mean_spinlabor = 0.0;  ///< quanta
    double se_spinlabor = 0.0;
    double mean_spintherm = 0.0;  ///< quanta
    double se_spintherm = 0.0;
    double mean_delta_jz = 0.0;  ///< quanta
    double se_delta_jz = 0.0;

    /// Exact frequencies n_q / n.
    std::map<int, double> empirical_pmf() const;

    /// Empirical <e^(-g L)> and its standard error.
    std::pair<double, double> exp_average(double g_value) const;

    void merge(const EnsembleSummary& other);
    void finalize();
};

EnsembleSummary simulate_ensemble(const ErasureParams& params,
                                  std::uint64_t n_samples,
                                  std::uint64_t master_seed);
EnsembleSummary simulate_ensemble(const ErasureParams& params,
                                  std::uint64_t n_samples,
                                  std::uint64_t master_seed,
                                  const StopRule& stop, int threads = 0);

/// One draw of the reservoir up-spin count: Binomial(n_spins, alpha(g)).
/// Accepts any finite g; n_spins >= 1.
int sample_reservoir_up_count(int n_spins, double g, std::uint64_t seed);

struct GofResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 0.0;
    int bins = 0;
};

/// Pearson chi-square of the empirical counts against an exact PMF, with
/// adjacent bins merged until every expected count is >= min_expected.
GofResult chi_square_gof(const EnsembleSummary& ensemble,
                         const SpinlaborPmf& pmf, double min_expected = 5.0);

/// First-law consistency report over a full-erasure ensemble:
/// mean Delta J_z(MA) should be -p_init quanta and the spintherm deficit
/// -Qs - Ls should be p_init quanta, both within 4 standard errors.
struct LedgerReport {
    std::uint64_t n_samples = 0;
    std::uint64_t n_unfinished = 0;
    double mean_delta_jz = 0.0;
    double se_delta_jz = 0.0;
    double expected_delta_jz = 0.0;  ///< -p_init
    double spintherm_deficit = 0.0;  ///< -(mean Qs) - mean Ls
    double se_deficit = 0.0;
    double expected_deficit = 0.0;  ///< p_init
    bool delta_jz_ok = false;
    bool deficit_ok = false;
    bool complete = false;  ///< no unfinished trajectories
};

LedgerReport ledger_check(const EnsembleSummary& ensemble);

}  // namespace spinerasure
