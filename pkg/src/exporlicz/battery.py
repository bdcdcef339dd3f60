"""The verification battery: every structural identity the package promises,
run over the shipped model set and reported as one PASS/FAIL line per check.

Covered: conjugate-pair agreement of the numerical Legendre transform with
the closed form, the constant chain tail <= luxemburg, moment <= tail,
luxemburg <= 3^(1/p) * moment, the two-sided equivalence between the
Luxemburg and mgf-domination norms with explicit constants, the Hoeffding
mgf bound and both tail curves (single variables and a 20-term sum), norm
homogeneity under seeded random rescaling, and monotone feasibility.
"""

import math

import numpy as np

from . import bounds, norms
from .norms import TAU_MARGIN_TOL, _tau_worst_margin
from .phi_core import as_exponent, legendre_numeric, phi, phi_function
from .rv_models import (
    BoundedScaled,
    Gaussian,
    Laplace,
    PointMass,
    Rademacher,
    UniformSym,
    WeibullSym,
    rademacher_sum,
)

INF = math.inf

REL_TOL = 1e-6
ABS_PAD = 1e-12

CONJUGACY_PS = (1.0, 1.25, 1.5, 2.0, 3.0, 4.0)
NORM_PS = (1.0, 1.5, 2.0, 3.0)


def battery_models():
    """The shipped model battery (name, model)."""
    return [
        ("rademacher", Rademacher()),
        ("uniform(1)", UniformSym(1.0)),
        ("gaussian(1)", Gaussian(1.0)),
        ("laplace(1)", Laplace(1.0)),
        ("weibull(2,1)", WeibullSym(2.0, 1.0)),
    ]


def _applicable(model, p):
    # Laplace participates at p = 1 only; elsewhere membership is decided
    # by the tail decay order
    if model.family == "laplace":
        return p == 1.0
    return p <= model.tail_decay_order


class Check:
    def __init__(self, name, ok, detail):
        self.name = name
        self.ok = ok
        self.detail = detail

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail}"


def _leq(a, b):
    """a <= b up to the battery tolerance (inf-aware)."""
    if a == INF:
        return b == INF
    if b == INF:
        return True
    return a <= b * (1.0 + REL_TOL) + ABS_PAD


def check_constants():
    """Sanity of the equivalence constants on p in [1, 64]: lower bounds
    2*sqrt(2) and 1, and continuity along the grid."""
    ps = np.geomspace(1.0, 64.0, 257)
    c_up = np.array([bounds.tau_upper_const(p) for p in ps])
    c_lo = np.array([bounds.luxemburg_upper_const(p) for p in ps])
    floor_up = 2.0 * math.sqrt(2.0) * (1.0 - 1e-12)
    ok_floor = bool(np.all(c_up >= floor_up) and np.all(c_lo >= 1.0))
    h = 1e-7
    jump = 0.0
    for p in ps[1:]:
        jump = max(jump, abs(bounds.tau_upper_const(p + h) - bounds.tau_upper_const(p)))
        jump = max(
            jump, abs(bounds.luxemburg_upper_const(p + h) - bounds.luxemburg_upper_const(p))
        )
    ok_cont = jump <= 1e-4
    return [
        Check(
            "constant-sanity",
            ok_floor and ok_cont,
            f"min tau const {float(np.min(c_up)):.9g} >= 2*sqrt(2),"
            f" min lux const {float(np.min(c_lo)):.9g} >= 1,"
            f" max local jump {jump:.3e}",
        )
    ]


def check_conjugacy(ps):
    out = []
    ys = np.linspace(-5.0, 5.0, 401)
    for p in ps:
        e = as_exponent(p)
        f = phi_function(e)
        worst = 0.0
        diverged_ok = True
        for y in ys:
            num = legendre_numeric(f, float(y))
            closed = phi(e.q, float(y))
            if closed == INF:
                if not num > 1e6:
                    diverged_ok = False
            else:
                worst = max(worst, abs(num - closed))
        ok = worst <= 1e-6 and diverged_ok
        out.append(
            Check(
                f"conjugacy p={p:g}",
                ok,
                f"max |numeric - closed| = {worst:.3e}"
                + ("" if diverged_ok else "; divergence not reported"),
            )
        )
    return out


def check_norm_chain(models, ps):
    out = []
    for name, model in models:
        for p in ps:
            if not _applicable(model, p):
                continue
            lux = norms.luxemburg_norm(model, p).value
            tl = norms.tail_norm(model, p).value
            mom = norms.moment_norm(model, p).value
            c3 = 3.0 ** (1.0 / p)
            ok = (
                _leq(tl, lux)
                and _leq(mom, tl)
                and _leq(lux, c3 * mom)
            )
            out.append(
                Check(
                    f"norm-chain {name} p={p:g}",
                    ok,
                    f"tail={tl:.9g} <= lux={lux:.9g}; moment={mom:.9g} <= tail;"
                    f" lux <= 3^(1/p)*moment={c3 * mom:.9g}",
                )
            )
    return out


def check_equivalence(models, ps):
    out = []
    for name, model in models:
        centered = model.center()
        for p in ps:
            lux = norms.luxemburg_norm(centered, p).value
            tau = norms.tau_norm(centered, p).value
            if lux == INF or tau == INF:
                ok = (lux == INF) and (tau == INF)
                out.append(
                    Check(
                        f"equivalence {name} p={p:g}",
                        ok,
                        f"outside the space: lux={lux}, tau={tau}"
                        + ("" if ok else " (must both be inf)"),
                    )
                )
                continue
            c_up = bounds.tau_upper_const(p)
            c_lo = bounds.luxemburg_upper_const(p)
            ok = _leq(tau, c_up * lux) and _leq(lux, c_lo * tau)
            out.append(
                Check(
                    f"equivalence {name} p={p:g}",
                    ok,
                    f"tau={tau:.9g} <= {c_up:.9g}*lux={c_up * lux:.9g};"
                    f" lux={lux:.9g} <= {c_lo:.9g}*tau={c_lo * tau:.9g}",
                )
            )
    return out


def _bounded_battery():
    return [
        ("rademacher", Rademacher(), 1.0),
        ("uniform(1)", UniformSym(1.0), 1.0),
        ("bounded(-1,2)", BoundedScaled([-1.0, 2.0], [2.0 / 3.0, 1.0 / 3.0]), 2.0),
        ("radsum(20)", rademacher_sum(20), 20.0),
    ]


def check_hoeffding():
    out = []
    # mgf bound ln E exp(tX) <= a^2 t^2 / 2 on a 1001-point grid
    for name, model, a in _bounded_battery():
        ts = np.linspace(-20.0 / a, 20.0 / a, 1001)
        lnm = model.ln_mgf_grid(ts)
        gap = float(np.max(lnm - 0.5 * a * a * ts * ts))
        out.append(
            Check(
                f"hoeffding-mgf {name}",
                gap <= 1e-12,
                f"max ln mgf - a^2 t^2/2 = {gap:.3e}",
            )
        )
    # both curves dominate the exact tail of single bounded variables
    for name, model, a in _bounded_battery():
        grid = np.linspace(1e-9, 2.2 * a, 700)
        for curve in (bounds.hoeffding_classic(a), bounds.hoeffding_complementary(a)):
            rep = bounds.verify_bound(model, curve, grid, tol=1e-12)
            out.append(
                Check(
                    f"hoeffding-{curve.name.split('_')[1]} {name}",
                    rep.ok,
                    f"{len(rep.violations)} violations, max gap {rep.max_gap:.3e}",
                )
            )
    # crossover of the two curves at exactly t = 2a
    a = 1.25
    classic = bounds.hoeffding_classic(a)
    compl = bounds.hoeffding_complementary(a)
    inside = np.linspace(0.0, 2.0 * a, 400)
    ok_inside = all(classic(t) <= compl(t) + 1e-15 for t in inside)
    ok_at = compl(2.0 * a) > classic(2.0 * a)
    just_out = 2.0 * a * (1.0 + 1e-12)
    ok_out = compl(just_out) == 0.0 and classic(just_out) > 0.0
    out.append(
        Check(
            "hoeffding-crossover",
            ok_inside and ok_at and ok_out,
            f"classic <= complementary on [0, 2a], complementary drops to 0 "
            f"just past 2a = {2 * a:g}",
        )
    )
    # sum of 20 signs: l1 parameter for the complementary curve, l2 classic
    s20 = rademacher_sum(20)
    a_l2, a_l1 = bounds.hoeffding_sum_params([1.0] * 20)
    grid = np.linspace(1e-9, 22.0, 700)
    rep_c = bounds.verify_bound(s20, bounds.hoeffding_classic(a_l2), grid, tol=1e-12)
    rep_k = bounds.verify_bound(
        s20, bounds.hoeffding_complementary(a_l1), grid, tol=1e-12
    )
    out.append(
        Check(
            "hoeffding-sum n=20",
            rep_c.ok and rep_k.ok,
            f"classic(a_l2={a_l2:.9g}): {len(rep_c.violations)} violations;"
            f" complementary(a_l1={a_l1:.9g}): {len(rep_k.violations)} violations",
        )
    )
    return out


def check_homogeneity(seed):
    rng = np.random.default_rng(seed)
    cases = [
        ("rademacher", Rademacher(), 2.0, ("luxemburg", "tail", "moment", "tau")),
        ("gaussian(1)", Gaussian(1.0), 2.0, ("luxemburg", "tail", "moment", "tau")),
        ("laplace(1)", Laplace(1.0), 1.0, ("luxemburg", "tail", "moment", "tau")),
        ("pointmass(1)", PointMass(1.0), 1.5, ("luxemburg", "tail", "moment")),
    ]
    out = []
    for name, model, p, kinds in cases:
        base = {k: norms.compute_norm(model, k, p).value for k in kinds}
        worst = 0.0
        for c0 in (0.5, 2.0, 10.0):
            c = c0 * float(rng.uniform(0.9, 1.1))
            scaled = model.scaled(c)
            for k in kinds:
                v = norms.compute_norm(scaled, k, p).value
                worst = max(worst, abs(v - c * base[k]) / (c * base[k]))
        out.append(
            Check(
                f"homogeneity {name} p={p:g}",
                worst <= REL_TOL,
                f"max relative drift {worst:.3e} over random scales",
            )
        )
    return out


def check_monotone_feasibility():
    out = []
    cases = [
        ("rademacher", Rademacher(), 2.0),
        ("gaussian(1)", Gaussian(1.0), 2.0),
        ("laplace(1)", Laplace(1.0), 1.0),
    ]
    for name, model, p in cases:
        e = as_exponent(p)
        k_star = norms.tau_norm(model, p).value
        up_ok = all(
            _tau_worst_margin(model, e.q, k_star * f, 512, refine=True)[0]
            <= TAU_MARGIN_TOL
            for f in (1.000001, 1.01, 1.5, 4.0)
        )
        down_ok = all(
            _tau_worst_margin(model, e.q, k_star * f, 512, refine=True)[0]
            > TAU_MARGIN_TOL
            for f in (0.99, 0.9)
        )
        out.append(
            Check(
                f"monotone-feasibility {name} p={p:g}",
                up_ok and down_ok,
                "feasible above tau, infeasible below",
            )
        )
    return out


def run_battery(p_filter=None, seed=0):
    """Run every check; returns (list of Check, all_ok)."""
    conj_ps = CONJUGACY_PS if p_filter is None else (p_filter,)
    norm_ps = NORM_PS if p_filter is None else (p_filter,)
    models = battery_models()
    checks = []
    checks.extend(check_constants())
    checks.extend(check_conjugacy(conj_ps))
    checks.extend(check_norm_chain(models, norm_ps))
    checks.extend(check_equivalence(models, norm_ps))
    checks.extend(check_hoeffding())
    checks.extend(check_homogeneity(seed))
    checks.extend(check_monotone_feasibility())
    return checks, all(c.ok for c in checks)


def battery_report(p_filter=None, seed=0):
    """Render the battery as deterministic text lines."""
    checks, ok = run_battery(p_filter=p_filter, seed=seed)
    lines = [c.line() for c in checks]
    n_fail = sum(1 for c in checks if not c.ok)
    lines.append(f"RESULT {'PASS' if ok else 'FAIL'} ({len(checks) - n_fail}/{len(checks)} checks)")
    return lines, ok
