"""Smoke tests for the spinerasure extension module."""

import math

import pytest

import spinerasure as se

LN2 = math.log(2.0)


def test_conversions_round_trip():
    assert se.gamma_from_alpha(0.5) == pytest.approx(0.0, abs=1e-15)
    assert se.alpha_from_gamma(LN2) == pytest.approx(1.0 / 3.0, rel=1e-14)
    for alpha in (0.01, 0.2, 1.0 / 3.0, 0.49):
        g = se.gamma_from_alpha(alpha)
        assert se.alpha_from_gamma(g) == pytest.approx(alpha, abs=1e-12)
    with pytest.raises(ValueError):
        se.gamma_from_alpha(1.5)


def test_core_quantities():
    assert se.q_up(1, LN2) == pytest.approx(0.2, rel=1e-14)
    assert se.vb_bound(LN2) == pytest.approx(1.0, rel=1e-14)
    params = se.ErasureParams.from_gamma(LN2)
    assert se.mean_spinlabor(params) == pytest.approx(0.93116644701511088,
                                                      abs=1e-12)
    assert se.spintherm_from_spinlabor(1.0, 0.5) == -1.5


def test_full_erasure_pmf():
    params = se.ErasureParams.from_gamma(LN2)
    pmf = se.pmf_full_erasure(params)
    assert pmf.converged
    assert pmf.probs[0] == pytest.approx(0.3145668313463307, abs=1e-12)
    assert pmf.probs[1] == pytest.approx(0.47185024701949605, abs=1e-12)
    assert pmf.mean() == pytest.approx(0.93116644701511088, abs=1e-10)
    assert sum(pmf.probs) == pytest.approx(1.0, abs=1e-10)
    assert se.closed_form_full_half(LN2, 2) == pytest.approx(pmf.probs[2],
                                                             abs=1e-12)


def test_jarzynski_and_bounds():
    params = se.ErasureParams.from_gamma(LN2)
    pmf = se.pmf_full_erasure(params)
    assert se.jarzynski_lhs(pmf) == pytest.approx(se.jarzynski_rhs(LN2),
                                                  abs=1e-9)
    assert se.bound_a(LN2) == 1.2
    assert se.bound_b(pmf) == pytest.approx(1.1009839097121574, abs=1e-10)
    assert se.violation_probability(pmf, 0.0) == pytest.approx(
        0.78641707836582675, abs=1e-10)
    curve = se.violation_curve(params, 1.5, 0.25)
    assert curve.pr_violation[0] <= curve.bound_b[0] <= curve.bound_a[0]


def test_semi_analytic_fit():
    fit = se.semi_analytic_fit(1)
    assert fit.decay_a == pytest.approx(0.91629073187415507, abs=1e-10)
    assert fit.amplitude_c == pytest.approx(0.78641707836582675, abs=1e-10)
    assert se.ratio_term(1, 1) == pytest.approx(2.0 / 3.0, rel=1e-14)
    study = se.decay_limit_study([1, 2, 4])
    assert [row.b for row in study.rows] == [1, 2, 4]
    assert study.rows[2].decay_a == pytest.approx(0.41300207504927266,
                                                  abs=1e-10)


def test_monte_carlo_determinism_and_ledger():
    params = se.ErasureParams.from_gamma(LN2)
    rec = se.simulate_trajectory(params, 4242)
    assert rec.ledger.balanced()
    replay = se.simulate_trajectory(params, 4242)
    assert replay.ledger.spinlabor_halfquanta == rec.ledger.spinlabor_halfquanta

    ens_a = se.simulate_ensemble(params, 5000, 99)
    ens_b = se.simulate_ensemble(params, 5000, 99)
    assert ens_a.spinlabor_counts == ens_b.spinlabor_counts
    assert ens_a.n_ledger_violations == 0
    assert ens_a.mean_spinlabor == pytest.approx(se.mean_spinlabor(params),
                                                 abs=4 * ens_a.se_spinlabor)
    report = se.ledger_check(ens_a)
    assert report.delta_jz_ok and report.deficit_ok

    pmf = se.pmf_full_erasure(params)
    gof = se.chi_square_gof(ens_a, pmf)
    assert gof.p_value >= 1e-4


def test_reservoir_sampler():
    draws = [se.sample_reservoir_up_count(1, LN2, seed)
             for seed in range(4000)]
    assert set(draws) <= {0, 1}
    mean = sum(draws) / len(draws)
    assert mean == pytest.approx(1.0 / 3.0, abs=4 * 0.0075)
