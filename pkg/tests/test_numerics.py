"""Bisection, supremum search, quadrature, special functions."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from exporlicz import (
    BisectionSpec,
    DomainError,
    EmptyDomainError,
    NoBracketError,
    log_gamma,
    log_sum_exp,
    monotone_bisect,
    sup_search,
)
from exporlicz.errors import ConvergenceError
from exporlicz.numerics import find_truncation, log_adaptive_quad
from exporlicz.phi_core import phi


class TestMonotoneBisect:
    def test_step_predicate(self):
        k = monotone_bisect(BisectionSpec(lambda x: x >= 3.0, 1.0, 8.0, rel_tol=1e-9))
        assert k == pytest.approx(3.0, rel=3e-9)

    def test_exp_threshold(self):
        k = monotone_bisect(
            BisectionSpec(lambda x: math.exp(1.0 / x) <= 2.0, 0.1, 1.0, rel_tol=1e-12)
        )
        assert k == pytest.approx(1.0 / math.log(2.0), rel=1e-11)

    def test_always_infeasible_raises(self):
        with pytest.raises(NoBracketError) as exc:
            monotone_bisect(BisectionSpec(lambda x: False, 1.0, 2.0))
        assert exc.value.side == "hi"

    def test_always_feasible_raises(self):
        with pytest.raises(NoBracketError) as exc:
            monotone_bisect(BisectionSpec(lambda x: True, 1.0, 2.0))
        assert exc.value.side == "lo"

    def test_result_is_feasible_and_tight(self):
        pred = lambda x: x >= math.pi
        k = monotone_bisect(BisectionSpec(pred, 0.5, 4.0, rel_tol=1e-10))
        assert pred(k)
        assert not pred(k * (1.0 - 1e-9))

    def test_bracket_auto_repair(self):
        # threshold far outside both initial bracket ends
        pred = lambda x: x >= 1000.0
        k = monotone_bisect(BisectionSpec(pred, 0.001, 0.002, rel_tol=1e-9))
        assert k == pytest.approx(1000.0, rel=3e-9)
        pred2 = lambda x: x >= 1e-6
        k2 = monotone_bisect(BisectionSpec(pred2, 10.0, 20.0, rel_tol=1e-9))
        assert k2 == pytest.approx(1e-6, rel=3e-9)

    def test_max_iter_carries_bracket(self):
        with pytest.raises(ConvergenceError) as exc:
            monotone_bisect(
                BisectionSpec(lambda x: x >= 3.0, 1.0, 8.0, rel_tol=1e-15, max_iter=5)
            )
        assert 0 < exc.value.lo < exc.value.hi

    def test_bracket_independence(self):
        pred = lambda x: math.exp(1.0 / x) <= 2.0
        want = 1.0 / math.log(2.0)
        for lo, hi in [(0.01, 0.02), (5.0, 80.0), (1.0, 2.0)]:
            k = monotone_bisect(BisectionSpec(pred, lo, hi, rel_tol=1e-11))
            assert abs(k - want) <= 2e-11 * want

    @given(st.floats(min_value=1e-3, max_value=1e3))
    @settings(max_examples=100)
    def test_random_step_thresholds(self, thr):
        k = monotone_bisect(
            BisectionSpec(lambda x: x >= thr, 0.5, 2.0, rel_tol=1e-9)
        )
        assert k == pytest.approx(thr, rel=5e-9)

    def test_validates_spec(self):
        with pytest.raises(DomainError):
            BisectionSpec(lambda x: True, -1.0, 2.0)
        with pytest.raises(DomainError):
            BisectionSpec(lambda x: True, 2.0, 1.0)


class TestSupSearch:
    def test_parabola(self):
        x, v = sup_search(lambda x: -((x - 2.0) ** 2), 0.0, 5.0)
        assert x == pytest.approx(2.0, abs=1e-8)
        assert v == pytest.approx(0.0, abs=1e-12)

    def test_legendre_objective(self):
        # s*t - phi_2(K s) at t = 1, K = 1 peaks at phi_2(1) = 1/2
        f = lambda s: s - phi(2.0, s)
        x, v = sup_search(f, 1e-9, 10.0)
        assert v == pytest.approx(0.5, abs=1e-10)
        assert x == pytest.approx(1.0, abs=1e-5)

    def test_wall_boundary(self):
        # 3s - phi_inf(s) climbs into the wall at s = 1
        f = lambda s: 3.0 * s - phi(math.inf, s)
        x, v = sup_search(f, 1e-9, 2.0)
        assert v == pytest.approx(2.5, abs=1e-8)
        assert x == pytest.approx(1.0, abs=1e-8)

    def test_empty_domain(self):
        with pytest.raises(EmptyDomainError):
            sup_search(lambda x: -math.inf, 0.0, 1.0)

    def test_geometric_grid_over_decades(self):
        # positive domain spanning decades takes the geometric grid
        f = lambda x: -(math.log(x) ** 2)
        x, v = sup_search(f, 1e-3, 1e3)
        assert x == pytest.approx(1.0, rel=1e-6)
        assert v == pytest.approx(0.0, abs=1e-10)

    def test_grid_points_validated(self):
        with pytest.raises(DomainError):
            sup_search(lambda x: x, 0.0, 1.0, grid_points=8)


class TestLogGamma:
    def test_integer_factorials(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=5e-15)
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)

    def test_half_integer(self):
        assert log_gamma(1.5) == pytest.approx(math.log(math.sqrt(math.pi) / 2.0), abs=1e-14)

    def test_accuracy_band(self):
        for x in np.geomspace(1.0, 200.0, 257):
            want = math.lgamma(float(x))
            assert log_gamma(float(x)) == pytest.approx(want, rel=1e-12, abs=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-2.5)


class TestLogSumExp:
    def test_simple(self):
        vals = np.array([0.0, 1.0, 2.0])
        naive = math.log(np.exp(vals).sum())
        assert log_sum_exp(vals) == pytest.approx(naive, rel=1e-14)

    def test_huge_inputs(self):
        assert log_sum_exp([1000.0, 1000.0], [0.5, 0.5]) == pytest.approx(1000.0)

    @given(st.lists(st.floats(min_value=-50, max_value=50), min_size=1, max_size=20))
    @settings(max_examples=200)
    def test_matches_naive_in_safe_range(self, vals):
        naive = math.log(sum(math.exp(v) for v in vals))
        assert log_sum_exp(np.array(vals)) == pytest.approx(naive, rel=1e-12)


class TestAdaptiveQuad:
    def test_gaussian_integral(self):
        # integral of exp(-x^2/2) over [0, 40] = sqrt(pi/2)
        logv, err = log_adaptive_quad(lambda x: -0.5 * x ** 2, 0.0, 40.0)
        assert math.exp(logv) == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-11)
        assert err <= 1e-10

    def test_agrees_with_scipy(self):
        cases = [
            (lambda x: np.sin(x) ** 2 - x, 0.0, 12.0),
            (lambda x: -np.abs(x - 2.0), 0.0, 9.0),
            (lambda x: x ** 1.5 - x ** 2, 0.0, 30.0),
        ]
        for logf, a, b in cases:
            want, _ = integrate.quad(lambda x: math.exp(float(logf(np.array([x]))[0]))
                                     if np.ndim(logf(np.array([x]))) else 0.0,
                                     a, b, limit=200)
            got = math.exp(log_adaptive_quad(logf, a, b)[0])
            assert got == pytest.approx(want, rel=1e-9)

    def test_huge_integrand_stays_exact_in_log_space(self):
        logv, _ = log_adaptive_quad(lambda x: np.full_like(x, 800.0), 0.0, 1.0)
        assert logv == pytest.approx(800.0, abs=1e-9)

    def test_infinite_integrand_reports_inf(self):
        logv, _ = log_adaptive_quad(lambda x: np.full_like(x, math.inf), 0.0, 1.0)
        assert logv == math.inf

    def test_find_truncation_walks_past_peak(self):
        # integrand peaked near 30 with gaussian falloff
        logf = lambda x: -0.5 * (x - 30.0) ** 2
        t = find_truncation(logf, 1.0)
        assert t > 38.0
