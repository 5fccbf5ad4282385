#include "spinerasure/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "spinerasure/mathutil.hpp"

namespace spinerasure {

StopRule StopRule::cycles(int n) {
    StopRule rule;
    rule.max_cycles = n;
    rule.validate();
    return rule;
}

StopRule StopRule::threshold(double t) {
    StopRule rule;
    rule.qup_threshold = t;
    rule.validate();
    return rule;
}

void StopRule::validate() const {
    if (max_cycles.has_value() == qup_threshold.has_value()) {
        throw std::invalid_argument(
            "exactly one of max_cycles or qup_threshold must be set");
    }
    if (max_cycles && *max_cycles < 1) {
        throw std::invalid_argument("max_cycles must be >= 1");
    }
    if (qup_threshold && !(*qup_threshold > 0.0)) {
        throw std::invalid_argument(
            "qup_threshold must be > 0 or the run never stops");
    }
}

TrajectoryRecord simulate_trajectory(const ErasureParams& params,
                                     std::uint64_t seed) {
    return simulate_trajectory(params, seed,
                               StopRule::threshold(params.tail_tol));
}

TrajectoryRecord simulate_trajectory(const ErasureParams& params,
                                     std::uint64_t seed,
                                     const StopRule& stop) {
    params.validate();
    stop.validate();
    SplitMix64 rng(seed);

    TrajectoryRecord rec;
    rec.seed = seed;
    const bool memory_started_up = rng.bernoulli(params.p_init);
    bool up = memory_started_up;
    std::int64_t labor = 0;
    std::int64_t therm = 0;
    int m = 0;
    for (;;) {
        ++m;
        // a fresh down ancilla joins; the CNOT raises it iff the block is up
        const std::uint8_t cost = up ? 1 : 0;
        labor += 2 * (std::int64_t)cost;
        const Spin pre = up ? Spin::up : Spin::down;
        // equilibration resamples the aligned (m+1)-spin block
        const double q = q_up(m, params.g);
        const bool up_after = rng.bernoulli(q);
        if (up_after != up) {
            therm += (up_after ? 1 : -1) * 2 * (std::int64_t)(m + 1);
        }
        up = up_after;
        rec.per_cycle.push_back(
            {cost, pre, up_after ? Spin::up : Spin::down});
        if (stop.max_cycles && m >= *stop.max_cycles) {
            break;
        }
        if (stop.qup_threshold && q < *stop.qup_threshold) {
            break;
        }
    }
    rec.cycles_run = m;
    rec.erased = !up;
    // direct Delta J_z of the block: each spin's final value minus its value
    // when it joined (memory at +-1, each ancilla at -1 half-quanta)
    const std::int64_t final_each = up ? 1 : -1;
    const std::int64_t delta = (std::int64_t)(m + 1) * final_each -
                               (memory_started_up ? 1 : -1) + (std::int64_t)m;
    rec.ledger.spinlabor_halfquanta = labor;
    rec.ledger.spintherm_halfquanta = therm;
    rec.ledger.delta_jz_memory_ancilla_halfquanta = delta;
    return rec;
}

std::map<int, double> EnsembleSummary::empirical_pmf() const {
    std::map<int, double> freq;
    for (const auto& [q, count] : spinlabor_counts) {
        freq[q] = (double)count / (double)n_samples;
    }
    return freq;
}

std::pair<double, double> EnsembleSummary::exp_average(double g_value) const {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& [q, count] : spinlabor_counts) {
        const double y = std::exp(-g_value * (double)q);
        sum += (double)count * y;
        sum_sq += (double)count * y * y;
    }
    const double n = (double)n_samples;
    const double mean = sum / n;
    if (n_samples < 2) {
        return {mean, 0.0};
    }
    double var = (sum_sq - n * mean * mean) / (n - 1.0);
    if (var < 0.0) {
        var = 0.0;
    }
    return {mean, std::sqrt(var / n)};
}

void EnsembleSummary::merge(const EnsembleSummary& other) {
    n_samples += other.n_samples;
    n_unfinished += other.n_unfinished;
    n_ledger_violations += other.n_ledger_violations;
    for (const auto& [q, count] : other.spinlabor_counts) {
        spinlabor_counts[q] += count;
    }
    sum_spintherm_halfquanta += other.sum_spintherm_halfquanta;
    sum_spintherm_sq_halfquanta += other.sum_spintherm_sq_halfquanta;
    sum_delta_jz_halfquanta += other.sum_delta_jz_halfquanta;
    sum_delta_jz_sq_halfquanta += other.sum_delta_jz_sq_halfquanta;
}

namespace {

// mean and standard error of the mean from integer sums of x and x^2
std::pair<double, double> mean_and_se(double sum, double sum_sq, double n) {
    const double mean = sum / n;
    double var = 0.0;
    if (n > 1.0) {
        var = (sum_sq - n * mean * mean) / (n - 1.0);
        if (var < 0.0) {
            var = 0.0;  // rounding guard for degenerate samples
        }
    }
    return {mean, std::sqrt(var / n)};
}

}  // namespace

void EnsembleSummary::finalize() {
    const double n = (double)n_samples;
    double sum_q = 0.0;
    double sum_q_sq = 0.0;
    for (const auto& [q, count] : spinlabor_counts) {
        sum_q += (double)count * (double)q;
        sum_q_sq += (double)count * (double)q * (double)q;
    }
    std::tie(mean_spinlabor, se_spinlabor) = mean_and_se(sum_q, sum_q_sq, n);
    // half-quanta sums -> quanta: mean/2, squares/4
    std::tie(mean_spintherm, se_spintherm) =
        mean_and_se((double)sum_spintherm_halfquanta / 2.0,
                    (double)sum_spintherm_sq_halfquanta / 4.0, n);
    std::tie(mean_delta_jz, se_delta_jz) =
        mean_and_se((double)sum_delta_jz_halfquanta / 2.0,
                    (double)sum_delta_jz_sq_halfquanta / 4.0, n);
}

namespace {

EnsembleSummary run_block(const ErasureParams& params, std::uint64_t first,
                          std::uint64_t last, std::uint64_t master_seed,
                          const StopRule& stop) {
    EnsembleSummary block;
    block.g = params.g;
    block.p_init = params.p_init;
    for (std::uint64_t i = first; i < last; ++i) {
        const TrajectoryRecord rec = simulate_trajectory(
            params, SplitMix64::substream_seed(master_seed, i), stop);
        ++block.n_samples;
        if (!rec.erased) {
            ++block.n_unfinished;
        }
        if (!rec.ledger.balanced()) {
            ++block.n_ledger_violations;
        }
        ++block.spinlabor_counts[(int)(rec.ledger.spinlabor_halfquanta / 2)];
        const std::int64_t t = rec.ledger.spintherm_halfquanta;
        const std::int64_t d = rec.ledger.delta_jz_memory_ancilla_halfquanta;
        block.sum_spintherm_halfquanta += t;
        block.sum_spintherm_sq_halfquanta += t * t;
        block.sum_delta_jz_halfquanta += d;
        block.sum_delta_jz_sq_halfquanta += d * d;
    }
    return block;
}

}  // namespace

EnsembleSummary simulate_ensemble(const ErasureParams& params,
                                  std::uint64_t n_samples,
                                  std::uint64_t master_seed) {
    return simulate_ensemble(params, n_samples, master_seed,
                             StopRule::threshold(params.tail_tol));
}

EnsembleSummary simulate_ensemble(const ErasureParams& params,
                                  std::uint64_t n_samples,
                                  std::uint64_t master_seed,
                                  const StopRule& stop, int threads) {
    params.validate();
    stop.validate();
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be >= 1");
    }
    unsigned n_threads = threads > 0
                             ? (unsigned)threads
                             : std::thread::hardware_concurrency();
    if (n_threads == 0) {
        n_threads = 1;
    }
    if ((std::uint64_t)n_threads * 1000 > n_samples) {
        n_threads = (unsigned)(n_samples / 1000) + 1;
    }

    std::vector<EnsembleSummary> blocks(n_threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (n_samples + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const std::uint64_t first = (std::uint64_t)t * chunk;
        const std::uint64_t last = std::min(n_samples, first + chunk);
        if (first >= last) {
            break;
        }
        workers.emplace_back([&, first, last, t] {
            blocks[t] = run_block(params, first, last, master_seed, stop);
        });
    }
    for (std::thread& w : workers) {
        w.join();
    }

    EnsembleSummary total;
    total.g = params.g;
    total.p_init = params.p_init;
    for (const EnsembleSummary& block : blocks) {
        total.merge(block);
    }
    total.finalize();
    return total;
}

int sample_reservoir_up_count(int n_spins, double g, std::uint64_t seed) {
    if (n_spins < 1) {
        throw std::domain_error("the reservoir needs at least one spin");
    }
    const double alpha = alpha_from_gamma(g);
    SplitMix64 rng(seed);
    const double u = rng.uniform01();

    // Invert the Binomial(n, alpha) CDF by enumerating the support outward
    // from the mode, always taking the side with more remaining mass;
    // expected work is O(sqrt(n alpha (1-alpha))).
    const int n = n_spins;
    int mode = (int)std::floor((double)(n + 1) * alpha);
    if (mode > n) {
        mode = n;
    }
    const double log_fm = std::lgamma((double)n + 1.0) -
                          std::lgamma((double)mode + 1.0) -
                          std::lgamma((double)(n - mode) + 1.0) +
                          (double)mode * std::log(alpha) +
                          (double)(n - mode) * std::log1p(-alpha);
    const double odds = alpha / (1.0 - alpha);
    int lo = mode;
    int hi = mode;
    double f_lo = std::exp(log_fm);
    double f_hi = f_lo;
    double acc = f_lo;
    int pick = mode;
    while (acc < u && (lo > 0 || hi < n)) {
        const double next_hi =
            hi < n ? f_hi * ((double)(n - hi) / (double)(hi + 1)) * odds : 0.0;
        const double next_lo =
            lo > 0 ? f_lo * ((double)lo / (double)(n - lo + 1)) / odds : 0.0;
        if (next_hi >= next_lo) {
            ++hi;
            f_hi = next_hi;
            acc += next_hi;
            pick = hi;
        } else {
            --lo;
            f_lo = next_lo;
            acc += next_lo;
            pick = lo;
        }
    }
    return pick;
}

GofResult chi_square_gof(const EnsembleSummary& ensemble,
                         const SpinlaborPmf& pmf, double min_expected) {
    if (ensemble.n_samples < 2) {
        throw std::invalid_argument("the ensemble is too small for a fit test");
    }
    const double n = (double)ensemble.n_samples;
    int q_max = (int)pmf.probs.size() - 1;
    if (!ensemble.spinlabor_counts.empty()) {
        q_max = std::max(q_max, ensemble.spinlabor_counts.rbegin()->first);
    }

    // contiguous bins, greedily closed once the expected count reaches the
    // floor; the dangling remainder merges into the previous bin
    std::vector<double> expected;
    std::vector<double> observed;
    double exp_acc = 0.0;
    double obs_acc = 0.0;
    for (int q = 0; q <= q_max; ++q) {
        const double pq = q < (int)pmf.probs.size() ? pmf.probs[q] : 0.0;
        exp_acc += pq * n;
        const auto it = ensemble.spinlabor_counts.find(q);
        obs_acc += it != ensemble.spinlabor_counts.end() ? (double)it->second
                                                         : 0.0;
        if (exp_acc >= min_expected) {
            expected.push_back(exp_acc);
            observed.push_back(obs_acc);
            exp_acc = 0.0;
            obs_acc = 0.0;
        }
    }
    if (exp_acc > 0.0 || obs_acc > 0.0) {
        if (expected.empty()) {
            throw std::invalid_argument(
                "no bin reaches the minimum expected count");
        }
        expected.back() += exp_acc;
        observed.back() += obs_acc;
    }
    if (expected.size() < 2) {
        throw std::invalid_argument(
            "fewer than two bins reach the minimum expected count");
    }

    double statistic = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const double d = observed[i] - expected[i];
        statistic += d * d / expected[i];
    }
    GofResult result;
    result.statistic = statistic;
    result.bins = (int)expected.size();
    result.dof = (int)expected.size() - 1;
    result.p_value = chi_squared_tail(statistic, result.dof);
    return result;
}

LedgerReport ledger_check(const EnsembleSummary& ensemble) {
    LedgerReport report;
    report.n_samples = ensemble.n_samples;
    report.n_unfinished = ensemble.n_unfinished;
    report.complete = ensemble.n_unfinished == 0;
    report.mean_delta_jz = ensemble.mean_delta_jz;
    report.se_delta_jz = ensemble.se_delta_jz;
    report.expected_delta_jz = -ensemble.p_init;
    // per trajectory -(Qs + Ls) = -Delta J_z, so the deficit shares its SE
    report.spintherm_deficit =
        -ensemble.mean_spintherm - ensemble.mean_spinlabor;
    report.se_deficit = ensemble.se_delta_jz;
    report.expected_deficit = ensemble.p_init;
    report.delta_jz_ok =
        std::fabs(report.mean_delta_jz - report.expected_delta_jz) <=
        4.0 * report.se_delta_jz;
    report.deficit_ok =
        std::fabs(report.spintherm_deficit - report.expected_deficit) <=
        4.0 * report.se_deficit;
    return report;
}

}  // namespace spinerasure
