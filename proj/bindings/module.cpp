#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinerasure/fluctuation.hpp"
#include "spinerasure/mathutil.hpp"
#include "spinerasure/montecarlo.hpp"

namespace py = pybind11;
using namespace spinerasure;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and Monte Carlo statistics for spin-reservoir "
              "information erasure (hbar = 1; costs in quanta of hbar).";

    py::class_<ErasureParams>(m, "ErasureParams")
        .def_static("from_gamma", &ErasureParams::from_gamma, py::arg("g"),
                    py::arg("p_init") = 0.5, py::arg("tail_tol") = 1e-14)
        .def_static("from_alpha", &ErasureParams::from_alpha,
                    py::arg("alpha"), py::arg("p_init") = 0.5,
                    py::arg("tail_tol") = 1e-14)
        .def_readonly("g", &ErasureParams::g)
        .def_readonly("alpha", &ErasureParams::alpha)
        .def_readonly("p_init", &ErasureParams::p_init)
        .def_readonly("tail_tol", &ErasureParams::tail_tol)
        .def("r", &ErasureParams::r)
        .def("validate", &ErasureParams::validate);

    py::class_<FirstLawLedger>(m, "FirstLawLedger")
        .def_readonly("spinlabor_halfquanta",
                      &FirstLawLedger::spinlabor_halfquanta)
        .def_readonly("spintherm_halfquanta",
                      &FirstLawLedger::spintherm_halfquanta)
        .def_readonly("delta_jz_memory_ancilla_halfquanta",
                      &FirstLawLedger::delta_jz_memory_ancilla_halfquanta)
        .def("balanced", &FirstLawLedger::balanced);

    m.def("gamma_from_alpha", &gamma_from_alpha, py::arg("alpha"));
    m.def("alpha_from_gamma", &alpha_from_gamma, py::arg("g"));
    m.def("q_up", &q_up, py::arg("m"), py::arg("g"));
    m.def("vb_bound", &vb_bound, py::arg("g"));
    m.def("truncation_cycles", &truncation_cycles, py::arg("params"));
    m.def("mean_spinlabor", &mean_spinlabor, py::arg("params"));
    m.def("variance_spinlabor", &variance_spinlabor, py::arg("params"));
    m.def("spintherm_from_spinlabor", &spintherm_from_spinlabor,
          py::arg("spinlabor"), py::arg("p_init"));

    py::class_<SpinlaborPmf>(m, "SpinlaborPmf")
        .def_readonly("g", &SpinlaborPmf::g)
        .def_readonly("p_init", &SpinlaborPmf::p_init)
        .def_readonly("cycles", &SpinlaborPmf::cycles)
        .def_readonly("converged", &SpinlaborPmf::converged)
        .def_readonly("tail_bound", &SpinlaborPmf::tail_bound)
        .def_readonly("probs", &SpinlaborPmf::probs)
        .def("mean", &SpinlaborPmf::mean)
        .def("variance", &SpinlaborPmf::variance)
        .def("validate", &SpinlaborPmf::validate);

    m.def("bernoulli_increments", &bernoulli_increments, py::arg("params"),
          py::arg("cycles"));
    m.def("pmf_after_m_cycles", &pmf_after_m_cycles, py::arg("params"),
          py::arg("cycles"));
    m.def("pmf_full_erasure", &pmf_full_erasure, py::arg("params"));
    m.def("closed_form_pm", &closed_form_pm, py::arg("params"),
          py::arg("cycles"), py::arg("q"));
    m.def("closed_form_full_half", &closed_form_full_half, py::arg("g"),
          py::arg("q"), py::arg("tail_tol") = 1e-14);
    m.def("pmf_exp_average", &pmf_exp_average, py::arg("pmf"), py::arg("g"));
    m.def("pmf_after_m_cycles_shifted_weights",
          &pmf_after_m_cycles_shifted_weights, py::arg("params"),
          py::arg("cycles"));

    py::class_<ViolationCurve>(m, "ViolationCurve")
        .def_readonly("g", &ViolationCurve::g)
        .def_readonly("epsilons", &ViolationCurve::epsilons)
        .def_readonly("pr_violation", &ViolationCurve::pr_violation)
        .def_readonly("bound_a", &ViolationCurve::bound_a)
        .def_readonly("bound_b", &ViolationCurve::bound_b)
        .def_readonly("bound_semi", &ViolationCurve::bound_semi)
        .def("validate", &ViolationCurve::validate);

    py::class_<SemiAnalyticFit>(m, "SemiAnalyticFit")
        .def_readonly("b", &SemiAnalyticFit::b)
        .def_readonly("g", &SemiAnalyticFit::g)
        .def_readonly("amplitude_c", &SemiAnalyticFit::amplitude_c)
        .def_readonly("decay_a", &SemiAnalyticFit::decay_a);

    py::class_<DecayStudyRow>(m, "DecayStudyRow")
        .def_readonly("b", &DecayStudyRow::b)
        .def_readonly("g", &DecayStudyRow::g)
        .def_readonly("decay_a", &DecayStudyRow::decay_a)
        .def_readonly("decay_a_squared", &DecayStudyRow::decay_a_squared);

    py::class_<DecayStudy>(m, "DecayStudy")
        .def_readonly("rows", &DecayStudy::rows)
        .def_readonly("ratio_monotone_increasing",
                      &DecayStudy::ratio_monotone_increasing)
        .def_readonly("final_ratio", &DecayStudy::final_ratio)
        .def_readonly("final_ratio_gap", &DecayStudy::final_ratio_gap);

    py::class_<DominationCounterexample>(m, "DominationCounterexample")
        .def_readonly("epsilon", &DominationCounterexample::epsilon)
        .def_readonly("bound_value", &DominationCounterexample::bound_value)
        .def_readonly("pr_value", &DominationCounterexample::pr_value);

    py::class_<DominationReport>(m, "DominationReport")
        .def_readonly("b", &DominationReport::b)
        .def_readonly("fit_violations", &DominationReport::fit_violations)
        .def_readonly("sqrt_rate_violations",
                      &DominationReport::sqrt_rate_violations);

    m.def("jarzynski_rhs", &jarzynski_rhs, py::arg("g"));
    m.def("jarzynski_lhs", &jarzynski_lhs, py::arg("pmf"));
    m.def("partial_exp_averages", &partial_exp_averages, py::arg("params"));
    m.def("bound_a", &bound_a, py::arg("g"));
    m.def("bound_b", &bound_b, py::arg("pmf"));
    m.def("violation_probability", &violation_probability, py::arg("pmf"),
          py::arg("epsilon"));
    m.def("violation_curve",
          py::overload_cast<const ErasureParams&, double, double>(
              &violation_curve),
          py::arg("params"), py::arg("eps_max"), py::arg("eps_step"));
    m.def("violation_curve",
          py::overload_cast<const ErasureParams&>(&violation_curve),
          py::arg("params"));
    m.def("semi_analytic_fit", &semi_analytic_fit, py::arg("b"),
          py::arg("tail_tol") = 1e-14);
    m.def("ratio_term", &ratio_term, py::arg("b"), py::arg("n"));
    m.def("ratio_sum", &ratio_sum, py::arg("b"));
    m.def("decay_limit_study", &decay_limit_study, py::arg("b_list"),
          py::arg("tail_tol") = 1e-14);
    m.def("check_semi_analytic_domination", &check_semi_analytic_domination,
          py::arg("b"), py::arg("eps_step") = 0.1,
          py::arg("tail_tol") = 1e-14);

    py::enum_<Spin>(m, "Spin")
        .value("down", Spin::down)
        .value("up", Spin::up);

    py::class_<CycleOutcome>(m, "CycleOutcome")
        .def_readonly("cnot_cost_quanta", &CycleOutcome::cnot_cost_quanta)
        .def_readonly("pre_equilibration", &CycleOutcome::pre_equilibration)
        .def_readonly("post_equilibration",
                      &CycleOutcome::post_equilibration);

    py::class_<StopRule>(m, "StopRule")
        .def_static("cycles", &StopRule::cycles, py::arg("n"))
        .def_static("threshold", &StopRule::threshold, py::arg("t"));

    py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
        .def_readonly("seed", &TrajectoryRecord::seed)
        .def_readonly("cycles_run", &TrajectoryRecord::cycles_run)
        .def_readonly("erased", &TrajectoryRecord::erased)
        .def_readonly("per_cycle", &TrajectoryRecord::per_cycle)
        .def_readonly("ledger", &TrajectoryRecord::ledger);

    m.def("simulate_trajectory",
          py::overload_cast<const ErasureParams&, std::uint64_t>(
              &simulate_trajectory),
          py::arg("params"), py::arg("seed"));
    m.def("simulate_trajectory",
          py::overload_cast<const ErasureParams&, std::uint64_t,
                            const StopRule&>(&simulate_trajectory),
          py::arg("params"), py::arg("seed"), py::arg("stop"));

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("g", &EnsembleSummary::g)
        .def_readonly("p_init", &EnsembleSummary::p_init)
        .def_readonly("n_samples", &EnsembleSummary::n_samples)
        .def_readonly("n_unfinished", &EnsembleSummary::n_unfinished)
        .def_readonly("n_ledger_violations",
                      &EnsembleSummary::n_ledger_violations)
        .def_readonly("spinlabor_counts", &EnsembleSummary::spinlabor_counts)
        .def_readonly("mean_spinlabor", &EnsembleSummary::mean_spinlabor)
        .def_readonly("se_spinlabor", &EnsembleSummary::se_spinlabor)
        .def_readonly("mean_spintherm", &EnsembleSummary::mean_spintherm)
        .def_readonly("se_spintherm", &EnsembleSummary::se_spintherm)
        .def_readonly("mean_delta_jz", &EnsembleSummary::mean_delta_jz)
        .def_readonly("se_delta_jz", &EnsembleSummary::se_delta_jz)
        .def("empirical_pmf", &EnsembleSummary::empirical_pmf)
        .def("exp_average", &EnsembleSummary::exp_average, py::arg("g"));

    m.def(
        "simulate_ensemble",
        [](const ErasureParams& params, std::uint64_t n,
           std::uint64_t master_seed) {
            return simulate_ensemble(params, n, master_seed);
        },
        py::arg("params"), py::arg("n_samples"), py::arg("master_seed"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "simulate_ensemble",
        [](const ErasureParams& params, std::uint64_t n,
           std::uint64_t master_seed, const StopRule& stop, int threads) {
            return simulate_ensemble(params, n, master_seed, stop, threads);
        },
        py::arg("params"), py::arg("n_samples"), py::arg("master_seed"),
        py::arg("stop"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def("sample_reservoir_up_count", &sample_reservoir_up_count,
          py::arg("n_spins"), py::arg("g"), py::arg("seed"));

    py::class_<GofResult>(m, "GofResult")
        .def_readonly("statistic", &GofResult::statistic)
        .def_readonly("dof", &GofResult::dof)
        .def_readonly("p_value", &GofResult::p_value)
        .def_readonly("bins", &GofResult::bins);

    m.def("chi_square_gof", &chi_square_gof, py::arg("ensemble"),
          py::arg("pmf"), py::arg("min_expected") = 5.0);

    py::class_<LedgerReport>(m, "LedgerReport")
        .def_readonly("n_samples", &LedgerReport::n_samples)
        .def_readonly("n_unfinished", &LedgerReport::n_unfinished)
        .def_readonly("mean_delta_jz", &LedgerReport::mean_delta_jz)
        .def_readonly("se_delta_jz", &LedgerReport::se_delta_jz)
        .def_readonly("expected_delta_jz", &LedgerReport::expected_delta_jz)
        .def_readonly("spintherm_deficit", &LedgerReport::spintherm_deficit)
        .def_readonly("se_deficit", &LedgerReport::se_deficit)
        .def_readonly("expected_deficit", &LedgerReport::expected_deficit)
        .def_readonly("delta_jz_ok", &LedgerReport::delta_jz_ok)
        .def_readonly("deficit_ok", &LedgerReport::deficit_ok)
        .def_readonly("complete", &LedgerReport::complete);

    m.def("ledger_check", &ledger_check, py::arg("ensemble"));

    m.def("regularized_gamma_q", &regularized_gamma_q, py::arg("s"),
          py::arg("x"));
    m.def("chi_squared_tail", &chi_squared_tail, py::arg("statistic"),
          py::arg("dof"));
}
