"""Norm solvers against closed-form solves and dense brute-force scans.

Every analytic value here was derived by solving the defining inequality by
hand; the brute-force scans rebuild the feasibility sets on dense grids with
independent margin formulas, so the bisection/refinement machinery is never
trusted to check itself.
"""

import math

import numpy as np
import pytest
from scipy import special as sps

from exporlicz import (
    BoundedScaled,
    Empirical,
    Gaussian,
    Laplace,
    PointMass,
    Rademacher,
    UniformSym,
    WeibullSym,
    luxemburg_norm,
    moment_norm,
    tail_norm,
    tau_norm,
)
from exporlicz.norms import TAU_MARGIN_TOL, _tau_worst_margin
from exporlicz.phi_core import as_exponent
from exporlicz.rv_models import exp_pow_moment

INF = math.inf
LN2 = math.log(2.0)


class TestLuxemburg:
    @pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0])
    @pytest.mark.parametrize("c", [0.5, 1.0, 10.0])
    def test_pointmass_family(self, p, c):
        want = c * LN2 ** (-1.0 / p)
        got = luxemburg_norm(PointMass(c), p).value
        assert got == pytest.approx(want, rel=1e-6)

    def test_gaussian_p2(self):
        got = luxemburg_norm(Gaussian(1.0), 2.0).value
        assert got == pytest.approx(math.sqrt(8.0 / 3.0), rel=1e-6)
        got2 = luxemburg_norm(Gaussian(2.5), 2.0).value
        assert got2 == pytest.approx(2.5 * math.sqrt(8.0 / 3.0), rel=1e-6)

    def test_rademacher_p2(self):
        got = luxemburg_norm(Rademacher(), 2.0).value
        assert got == pytest.approx(1.0 / math.sqrt(LN2), rel=1e-6)

    def test_laplace_p1(self):
        # E exp(|X|/K) = K/(K - b) <= 2 iff K >= 2b
        assert luxemburg_norm(Laplace(1.0), 1.0).value == pytest.approx(2.0, rel=1e-6)
        assert luxemburg_norm(Laplace(0.3), 1.0).value == pytest.approx(0.6, rel=1e-6)

    def test_weibull_matched_exponent(self):
        # 2^r/(1-r) = 2 at r* solving 2^(r-1) = 1 - r; luxemburg = s*r*^(-1/p)
        def fixed_point():
            lo, hi = 1e-9, 1.0 - 1e-9
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if 2.0 ** mid / (1.0 - mid) <= 2.0:
                    lo = mid
                else:
                    hi = mid
            return lo

        r_star = fixed_point()
        for s, p0 in ((1.0, 2.0), (3.0, 1.5)):
            want = s * r_star ** (-1.0 / p0)
            got = luxemburg_norm(WeibullSym(p0, s), p0).value
            assert got == pytest.approx(want, rel=1e-6)

    def test_uniform_p2_erfi_solve(self):
        # independent closed-form solve of (K/a)(sqrt(pi)/2) erfi(a/K) = 2
        a = 1.0

        def val(k):
            return (k / a) * (math.sqrt(math.pi) / 2.0) * sps.erfi(a / k)

        lo, hi = 0.3, 3.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if val(mid) <= 2.0:
                hi = mid
            else:
                lo = mid
        got = luxemburg_norm(UniformSym(a), 2.0).value
        assert got == pytest.approx(hi, rel=1e-7)

    def test_degenerate_zero(self):
        assert luxemburg_norm(PointMass(0.0), 2.0).value == 0.0
        assert luxemburg_norm(Empirical([0.0, 0.0]), 1.5).value == 0.0

    def test_not_in_space(self):
        est = luxemburg_norm(Laplace(1.0), 2.0)
        assert est.value == INF
        assert "not in the space" in est.certificate
        assert luxemburg_norm(Gaussian(1.0), 3.0).value == INF

    def test_certified_feasible_upper_end(self):
        est = luxemburg_norm(Gaussian(1.0), 1.5, rel_tol=1e-9)
        assert exp_pow_moment(Gaussian(1.0), 1.5, est.value) <= 2.0 + 1e-9
        assert exp_pow_moment(Gaussian(1.0), 1.5, est.value * (1 - 3e-9)) > 2.0


class TestTailNorm:
    def test_weibull_is_exactly_scale(self):
        for p0, s in ((1.0, 1.0), (1.5, 2.0), (2.0, 0.7), (3.0, 1.0)):
            got = tail_norm(WeibullSym(p0, s), p0).value
            assert got == pytest.approx(s, rel=1e-9)

    def test_rademacher(self):
        for p in (1.0, 2.0, 3.0):
            got = tail_norm(Rademacher(), p).value
            assert got == pytest.approx(LN2 ** (-1.0 / p), rel=1e-12)

    def test_pointmass_zero(self):
        assert tail_norm(PointMass(0.0), 2.0).value == 0.0

    def test_discrete_matches_dense_scan(self):
        m = BoundedScaled([-2.0, -0.5, 1.0, 3.0], [0.2, 0.3, 0.3, 0.2])
        p = 1.5
        ts = np.linspace(1e-6, 3.0, 300001)
        dense = max(
            t / (LN2 - math.log(m.tail(float(t)))) ** (1.0 / p)
            for t in ts
            if m.tail(float(t)) > 0.0
        )
        got = tail_norm(m, p).value
        assert got >= dense - 1e-9
        assert got == pytest.approx(dense, rel=1e-4)

    @pytest.mark.parametrize(
        "model,p",
        [(UniformSym(1.0), 2.0), (Gaussian(1.0), 2.0), (Gaussian(1.0), 1.0),
         (Laplace(1.0), 1.0)],
    )
    def test_continuous_dense_oracle(self, model, p):
        got = tail_norm(model, p)
        t_hi = model.quantile_abs(1e-22)
        ts = np.linspace(t_hi * 1e-7, t_hi, 200001)
        dense = 0.0
        for t in ts:
            tl = model.tail(float(t))
            if tl > 0.0:
                dense = max(dense, t / (LN2 - math.log(tl)) ** (1.0 / p))
        assert got.value == pytest.approx(dense, rel=1e-5)
        assert got.value >= dense * (1.0 - 1e-7)

    def test_not_in_space(self):
        assert tail_norm(Laplace(1.0), 2.0).value == INF


class TestMomentNorm:
    def test_pointmass_zero(self):
        assert moment_norm(PointMass(0.0), 2.0).value == 0.0

    def test_rademacher_dense_alpha_oracle(self):
        # the sup is interior (near alpha = 2.8), well above the alpha = 1
        # value 1/sqrt(pi)
        alphas = np.linspace(1.0, 50.0, 200001)
        dense = max(
            math.exp(-(LN2 + math.lgamma(a / 2.0 + 1.0)) / a) for a in alphas
        )
        got = moment_norm(Rademacher(), 2.0).value
        assert got == pytest.approx(dense, rel=1e-9)
        assert got > 1.0 / math.sqrt(math.pi)
        at_one = math.exp(-(LN2 + math.lgamma(1.5)) / 1.0)
        assert at_one == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-12)

    def test_laplace_ratio_closed_form(self):
        # E|X|^alpha = Gamma(alpha+1) so M(alpha) = 2^(-1/alpha) -> sup at the
        # grid cutoff alpha = 50
        got = moment_norm(Laplace(1.0), 1.0)
        assert got.value == pytest.approx(2.0 ** (-1.0 / 50.0), rel=1e-9)
        assert "alpha" in got.certificate

    def test_gaussian_dense_alpha_oracle(self):
        m = Gaussian(1.0)
        alphas = np.linspace(1.0, 50.0, 100001)
        dense = max(
            math.exp((m.log_abs_moment(float(a)) - LN2
                      - math.lgamma(a / 2.0 + 1.0)) / a)
            for a in alphas
        )
        assert moment_norm(m, 2.0).value == pytest.approx(dense, rel=1e-8)

    def test_homogeneous(self):
        base = moment_norm(Gaussian(1.0), 2.0).value
        assert moment_norm(Gaussian(3.0), 2.0).value == pytest.approx(
            3.0 * base, rel=1e-10
        )


def _brute_margin_rademacher(q, k, ts):
    lnm = np.logaddexp(ts, -ts) - LN2
    return lnm


def _brute_margin_gaussian(sigma):
    def f(q, k, ts):
        return 0.5 * (sigma * ts) ** 2

    return f


def _brute_margin_uniform(a):
    def f(q, k, ts):
        u = np.abs(a * ts)
        u2 = u * u
        small = u < 0.05
        out = np.empty_like(u)
        out[small] = np.log1p(u2[small] / 6.0 + u2[small] ** 2 / 120.0)
        ub = u[~small]
        out[~small] = ub + np.log1p(-np.exp(-2.0 * ub)) - np.log(2.0 * ub)
        return out

    return f


def _brute_margin_laplace(b):
    def f(q, k, ts):
        u = (b * ts) ** 2
        out = np.full_like(u, INF)
        ok = u < 1.0
        out[ok] = -np.log1p(-u[ok])
        return out

    return f


def tau_brute_force(ln_mgf_fn, p, k_lo, k_hi, nk=900, nt=4000):
    """Independent dense 2-D scan: smallest grid K whose margin stays <= 0."""
    from exporlicz._kernels import phi_grid

    q = as_exponent(p).q
    for k in np.geomspace(k_lo, k_hi, nk):
        t_hi = np.nextafter(1.0 / k, 0.0) if q == INF else 1e3 / k
        ts = np.geomspace(1e-7 / k, t_hi, nt)
        lnm = ln_mgf_fn(q, k, ts)
        ph = np.asarray(phi_grid(q, k * ts))
        with np.errstate(invalid="ignore"):
            margins = np.where(np.isinf(ph), -INF, lnm - ph)
        if float(np.max(margins)) <= 1e-11:
            return float(k)
    return INF


class TestTauNorm:
    def test_gaussian_p2_exact(self):
        for sigma in (0.5, 1.0, 2.0, 7.5):
            assert tau_norm(Gaussian(sigma), 2.0).value == pytest.approx(
                sigma, rel=1e-9
            )

    def test_gaussian_p1_is_sigma(self):
        # inside the wall |t| <= 1/K the constraint reads sigma^2 t^2/2 <=
        # K^2 t^2 / 2, vacuous beyond: tau = sigma
        assert tau_norm(Gaussian(1.3), 1.0).value == pytest.approx(1.3, rel=1e-9)

    def test_rademacher_p2_taylor_forced(self):
        got = tau_norm(Rademacher(), 2.0).value
        assert got == pytest.approx(1.0, rel=1e-6)
        assert got <= 1.0 + 1e-12

    def test_uniform_p2_variance_point(self):
        got = tau_norm(UniformSym(1.0), 2.0).value
        assert got == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-6)

    def test_laplace_p1_wall_solve(self):
        # the binding point is the wall t = 1/K; solving
        # -ln(1 - 1/K^2) = 1/2 gives K = (1 - e^(-1/2))^(-1/2)
        want = (1.0 - math.exp(-0.5)) ** -0.5
        assert tau_norm(Laplace(1.0), 1.0).value == pytest.approx(want, rel=1e-6)

    def test_weibull_p2_variance_point(self):
        # variance 2 * gammaincc(2, ln 2) = 1 + ln 2 binds at t -> 0
        want = math.sqrt(1.0 + LN2)
        assert tau_norm(WeibullSym(2.0, 1.0), 2.0).value == pytest.approx(
            want, rel=1e-6
        )

    def test_brute_force_oracles(self):
        cases = [
            (Rademacher(), 2.0, lambda q, k, ts: _brute_margin_rademacher(q, k, ts)),
            (Gaussian(1.0), 2.0, _brute_margin_gaussian(1.0)),
            (UniformSym(1.0), 2.0, _brute_margin_uniform(1.0)),
            (Laplace(1.0), 1.0, _brute_margin_laplace(1.0)),
            (UniformSym(1.0), 1.0, _brute_margin_uniform(1.0)),
        ]
        for model, p, margin_fn in cases:
            got = tau_norm(model, p).value
            brute = tau_brute_force(margin_fn, p, got * 0.7, got * 1.5)
            assert got == pytest.approx(brute, rel=2e-3)

    def test_weibull_brute_force(self):
        m = WeibullSym(2.0, 1.0)
        got = tau_norm(m, 2.0).value
        k_lo, k_hi = got * 0.8, got * 1.3
        ts = np.geomspace(1e-7 / k_hi, 1e3 / k_lo, 6000)
        lnm = m.ln_mgf_grid(ts)  # cumulants once; the K scan stays dense
        brute = INF
        for k in np.geomspace(k_lo, k_hi, 400):
            sel = ts <= 1e3 / k
            ph = 0.5 * np.square(k * ts[sel])
            out = k * ts[sel] > 1.0
            ph[out] = np.square(k * ts[sel][out]) / 2.0
            if float(np.max(lnm[sel] - ph)) <= 1e-11:
                brute = float(k)
                break
        assert got == pytest.approx(brute, rel=2e-3)

    def test_degenerate_zero(self):
        assert tau_norm(PointMass(0.0), 2.0).value == 0.0

    def test_infinite_p_rejected(self):
        with pytest.raises(ValueError):
            tau_norm(Rademacher(), INF)

    def test_not_dominated(self):
        assert tau_norm(Laplace(1.0), 2.0).value == INF
        assert tau_norm(Gaussian(1.0), 3.0).value == INF
        assert tau_norm(WeibullSym(1.0, 1.0), 1.5).value == INF
        assert tau_norm(WeibullSym(2.0, 1.0), 3.0).value == INF

    def test_asymmetric_bounded_two_sided(self):
        m = BoundedScaled([-1.0, 2.0], [2.0 / 3.0, 1.0 / 3.0])
        got = tau_norm(m, 2.0).value
        # brute force with the model's own cumulant grid (asymmetric: both signs)
        q = 2.0
        best = INF
        for k in np.geomspace(got * 0.7, got * 1.5, 900):
            ok = True
            for s in (1.0, -1.0):
                ts = np.geomspace(1e-7 / k, 1e3 / k, 3000)
                lnm = m.ln_mgf_grid(s * ts)
                ph = 0.5 * (k * ts) ** 2
                ph[k * ts > 1.0] = (k * ts[k * ts > 1.0]) ** 2 / 2.0
                if float(np.max(lnm - ph)) > 1e-11:
                    ok = False
                    break
            if ok:
                best = float(k)
                break
        assert got == pytest.approx(best, rel=2e-3)

    def test_monotone_feasibility_spot(self):
        m = Gaussian(1.0)
        k_star = tau_norm(m, 2.0).value
        for f in (1.0000001, 1.1, 3.0):
            margin, _ = _tau_worst_margin(m, 2.0, k_star * f, 512, refine=True)
            assert margin <= TAU_MARGIN_TOL
        for f in (0.999, 0.8):
            margin, _ = _tau_worst_margin(m, 2.0, k_star * f, 512, refine=True)
            assert margin > TAU_MARGIN_TOL

    def test_scaling(self):
        base = tau_norm(Laplace(1.0), 1.0).value
        assert tau_norm(Laplace(2.0), 1.0).value == pytest.approx(
            2.0 * base, rel=1e-9
        )


class TestZeroIff:
    def test_zero_only_for_degenerate_models(self):
        # value = 0 iff the model is a point mass at zero (up to tolerance)
        nondegenerate = [Rademacher(), Gaussian(0.01), UniformSym(5.0),
                         Empirical([-1e-6, 1e-6])]
        for m in nondegenerate:
            assert luxemburg_norm(m, 2.0).value > 0.0
            assert tail_norm(m, 2.0).value > 0.0
            assert moment_norm(m, 2.0).value > 0.0
            assert tau_norm(m, 2.0).value > 0.0
        degenerate = [PointMass(0.0), Empirical([0.0, 0.0, 0.0])]
        for m in degenerate:
            assert luxemburg_norm(m, 2.0).value == 0.0
            assert tail_norm(m, 2.0).value == 0.0
            assert moment_norm(m, 2.0).value == 0.0
            assert tau_norm(m, 2.0).value == 0.0

    def test_centered_empirical_tau(self):
        m = Empirical([-1.0, -1.0, 2.0])
        got = tau_norm(m, 2.0).value
        # matches the equal-weight bounded model with the same atoms
        want = tau_norm(BoundedScaled([-1.0, 2.0], [2 / 3, 1 / 3]), 2.0).value
        assert got == pytest.approx(want, rel=1e-9)


class TestEstimateMetadata:
    def test_fields(self):
        est = luxemburg_norm(Gaussian(1.0), 2.0)
        assert est.kind == "luxemburg"
        assert est.p.p == 2.0
        assert est.rel_tol == 1e-9
        assert "E exp" in est.certificate
        assert float(est) == est.value

    def test_tau_certificate_has_margin(self):
        est = tau_norm(Gaussian(1.0), 2.0)
        assert "margin" in est.certificate
