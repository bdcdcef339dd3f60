"""The four norm-like functionals.

* luxemburg_norm: inf{K > 0 : E exp(|X/K|^p) <= 2}
* tail_norm:      smallest L with P(|X| >= t) <= 2 exp(-(t/L)^p) for all t
* moment_norm:    smallest M with E|X|^alpha <= 2 M^alpha Gamma(alpha/p + 1)
                  for all alpha >= 1 (grid approximation, cutoff reported)
* tau_norm:       inf{K > 0 : E exp(tX) <= exp(phi_q(K t)) for all t},
                  q the conjugate exponent (centered models only)

All infima are realized by monotone bisection and return the upper bracket
end, so every value is certified feasible within tolerance and is a valid
constant in downstream tail bounds.  Non-membership (the infimum is +inf)
is decided exactly from model structure: a variable whose tail decays slower
than exp(-t^p) has no finite Luxemburg or tail norm, and a moment generating
function with a bounded domain or super-phi_q growth admits no domination
constant.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, numerics
from .errors import CenteringRequiredError, NoBracketError
from .phi_core import Exponent, as_exponent

INF = math.inf
_LN2 = math.log(2.0)

# absolute tolerance, in cumulant units, for the mgf-domination feasibility
# margin; quadratic-contact models need this far below the norm tolerance
TAU_MARGIN_TOL = 1e-13

# grid margins below this are decisively feasible and skip refinement; the
# band bounds how far the true supremum can hide above the grid values
TAU_REFINE_BAND = 0.05

# how deep into the tail the default tail-norm grid reaches; matched to the
# alpha <= 50 moment-grid cutoff so the constant chain survives truncation
TAIL_GRID_LEVEL = 1e-22

ALPHA_MAX = 50.0


@dataclass(frozen=True)
class NormEstimate:
    """A computed norm value with its method metadata."""

    value: float
    kind: str  # "luxemburg" | "tail" | "moment" | "tau"
    p: Exponent
    rel_tol: float
    certificate: str

    @property
    def finite(self):
        return self.value < INF

    def __float__(self):
        return float(self.value)


def _degenerate(model):
    return model.essential_sup == 0.0


def _require_finite(e):
    if not e.is_finite:
        raise ValueError("this norm requires a finite exponent")


def luxemburg_norm(model, p, rel_tol=1e-9):
    """inf{K > 0 : E exp(|X/K|^p) <= 2} by monotone bisection."""
    e = as_exponent(p)
    _require_finite(e)
    if _degenerate(model):
        return NormEstimate(0.0, "luxemburg", e, rel_tol, "degenerate: |X| = 0 a.s.")
    if e.p > model.tail_decay_order:
        return NormEstimate(
            INF, "luxemburg", e, rel_tol,
            f"not in the space: tail decay order {model.tail_decay_order:g} < p",
        )

    def feasible(k):
        return model.exp_pow_moment(e.p, k).value <= 2.0

    sh = model.scale_hint
    try:
        k = numerics.monotone_bisect(
            numerics.BisectionSpec(feasible, lo=sh / 4.0, hi=sh * 4.0, rel_tol=rel_tol)
        )
    except NoBracketError as nb:
        if nb.side == "hi":
            return NormEstimate(INF, "luxemburg", e, rel_tol, "not in the space")
        return NormEstimate(0.0, "luxemburg", e, rel_tol, "feasible for every K > 0")
    achieved = model.exp_pow_moment(e.p, k).value
    return NormEstimate(
        k, "luxemburg", e, rel_tol, f"E exp(|X/K|^p) = {achieved:.9g} <= 2"
    )


def _tail_ratio(model, pval, t):
    tl = model.tail(t)
    if tl <= 0.0:
        return -INF
    return t / (_LN2 - math.log(tl)) ** (1.0 / pval)


def default_tail_grid(model, n=1800):
    """Geometric plus linear coverage out to the 1e-22 tail level."""
    t_hi = model.quantile_abs(TAIL_GRID_LEVEL)
    if t_hi <= 0.0:
        return np.empty(0)
    geo = np.geomspace(t_hi * 1e-8, t_hi, 2 * n // 3)
    lin = np.linspace(t_hi / (n // 3), t_hi, n // 3)
    return np.unique(np.concatenate([geo, lin]))


def tail_norm(model, p, t_grid=None):
    """Smallest L making P(|X| >= t) <= 2 exp(-(t/L)^p) hold on the grid.

    Discrete models are evaluated exactly on their support points (the
    supremum over all t is attained there); continuous models use a deep
    grid plus golden-section refinement.
    """
    e = as_exponent(p)
    _require_finite(e)
    if _degenerate(model):
        return NormEstimate(0.0, "tail", e, 0.0, "degenerate: |X| = 0 a.s.")
    if e.p > model.tail_decay_order:
        return NormEstimate(
            INF, "tail", e, 0.0,
            f"not in the space: tail decay order {model.tail_decay_order:g} < p",
        )

    atoms = model.atoms
    if atoms is not None and t_grid is None:
        ts = np.unique(np.abs(atoms[0]))
        ts = ts[ts > 0.0]
        vals = [_tail_ratio(model, e.p, float(t)) for t in ts]
        i = int(np.argmax(vals))
        return NormEstimate(
            float(vals[i]), "tail", e, 0.0,
            f"exact sup over {ts.size} support points, argmax t = {ts[i]:.9g}",
        )

    ts = default_tail_grid(model) if t_grid is None else np.asarray(t_grid, float)
    vals = np.array([_tail_ratio(model, e.p, float(t)) for t in ts])
    i = int(np.argmax(vals))
    best_t, best = float(ts[i]), float(vals[i])
    a = float(ts[max(i - 1, 0)])
    b = float(ts[min(i + 1, ts.size - 1)])
    if b > a:
        rx, rv = numerics._golden_max(lambda t: _tail_ratio(model, e.p, t), a, b, 90)
        if rv > best:
            best_t, best = rx, rv
    return NormEstimate(
        best, "tail", e, 0.0,
        f"grid sup over {ts.size} points to t_max = {ts[-1]:.6g}"
        f" (tail level {TAIL_GRID_LEVEL:g}), argmax t = {best_t:.9g}",
    )


def moment_norm(model, p, alpha_grid=None):
    """Smallest grid-valid M in E|X|^alpha <= 2 M^alpha Gamma(alpha/p + 1).

    The sup over alpha >= 1 is approximated on [1, 50] (geometric grid plus
    golden refinement); the cutoff is part of the certificate.
    """
    e = as_exponent(p)
    _require_finite(e)
    if _degenerate(model):
        return NormEstimate(0.0, "moment", e, 0.0, "degenerate: |X| = 0 a.s.")
    if e.p > model.tail_decay_order:
        return NormEstimate(
            INF, "moment", e, 0.0,
            f"not in the space: tail decay order {model.tail_decay_order:g} < p",
        )
    grid = (
        np.geomspace(1.0, ALPHA_MAX, 64) if alpha_grid is None
        else np.asarray(alpha_grid, float)
    )

    def log_m(alpha):
        lm = model.log_abs_moment(float(alpha))
        if lm == INF:
            return INF
        return (lm - _LN2 - numerics.log_gamma(alpha / e.p + 1.0)) / alpha

    vals = np.array([log_m(a) for a in grid])
    if np.any(np.isposinf(vals)):
        return NormEstimate(INF, "moment", e, 0.0, "infinite moment on the grid")
    i = int(np.argmax(vals))
    best_a, best = float(grid[i]), float(vals[i])
    a = float(grid[max(i - 1, 0)])
    b = float(grid[min(i + 1, grid.size - 1)])
    if b > a:
        rx, rv = numerics._golden_max(log_m, a, b, 90)
        if rv > best:
            best_a, best = rx, rv
    return NormEstimate(
        math.exp(best), "moment", e, 0.0,
        f"sup over alpha in [1, {grid[-1]:g}] ({grid.size} points + refinement),"
        f" argmax alpha = {best_a:.6g}",
    )


def _tau_grid(q, k, n):
    t_lo = 1e-6 / k
    if q == INF:
        # the constraint is vacuous beyond the phi_inf wall at |t| = 1/K;
        # nextafter keeps the endpoint product K*t at or below 1
        t_hi = np.nextafter(1.0 / k, 0.0)
    else:
        t_hi = 1e3 / k
    if t_hi <= t_lo:
        t_lo = t_hi * 1e-9
    ts = np.geomspace(t_lo, t_hi, n)
    ts[-1] = t_hi
    return ts


def _local_maxima(vals, top=2):
    idx = []
    n = vals.size
    for i in range(n):
        left = vals[i - 1] if i > 0 else -INF
        right = vals[i + 1] if i < n - 1 else -INF
        if vals[i] >= left and vals[i] >= right and vals[i] > -INF:
            idx.append(i)
    idx.sort(key=lambda j: -vals[j])
    return idx[:top]


def _tau_worst_margin(model, q, k, n_grid, refine):
    """Best-effort sup over t of ln E exp(tX) - phi_q(K t).

    Grid margins are exact witnesses (a positive one proves infeasibility);
    golden refinement around the top local maxima guards the feasible
    direction, where the supremum may hide between grid points.
    """
    qv = float(q)
    ts = _tau_grid(qv, k, n_grid)
    sides = (1.0,) if model.is_symmetric else (1.0, -1.0)
    cached = []
    best, best_t = -INF, float(ts[-1])
    for s in sides:
        lnm = model.ln_mgf_grid(s * ts)
        m = _kernels.tau_margin(qv, k, ts, lnm)
        if m == INF:
            return INF, best_t
        cached.append((s, lnm))
        if m > best:
            best = m
    ph = _kernels.phi_grid(qv, k * ts)
    wall = np.isinf(ph)
    for s, lnm in cached:
        with np.errstate(invalid="ignore"):
            margins = np.where(wall, -INF, lnm - ph)
        j = int(np.argmax(margins))
        if float(margins[j]) >= best:
            best_t = float(s * ts[j])
        if refine and -TAU_REFINE_BAND <= best <= TAU_MARGIN_TOL:

            def g(t, _s=s):
                p1 = _kernels.phi_scalar(qv, k * t)
                if math.isinf(p1):
                    return -INF
                return model.ln_mgf(_s * t) - p1

            for jj in _local_maxima(margins):
                a = float(ts[max(jj - 1, 0)])
                b = float(ts[min(jj + 1, ts.size - 1)])
                if b > a:
                    rx, rv = numerics._golden_max(g, a, b, 60)
                    if rv > best:
                        best, best_t = rv, s * rx
    return best, best_t


def tau_norm(model, p, rel_tol=1e-9, t_budget=512):
    """inf{K > 0 : E exp(tX) <= exp(phi_q(K t)) for all t}, q conjugate to p.

    Requires a centered model (no auto-centering) and finite p (at p = inf
    the conjugate phi_1 grows linearly and the binding point escapes any
    finite search range; the wall function still appears as q = inf when
    p = 1).  Returns +inf when the mgf domain is bounded while q is finite,
    or when the cumulant function grows faster than |t|^q.
    """
    e = as_exponent(p)
    _require_finite(e)
    q = e.q
    sh = model.scale_hint
    if abs(model.mean) > 1e-10 * max(sh, abs(model.mean)):
        raise CenteringRequiredError(
            f"tau norm needs E X = 0; model has mean {model.mean:g}"
        )
    if _degenerate(model):
        return NormEstimate(0.0, "tau", e, rel_tol, "degenerate: X = 0 a.s.")
    if q != INF:
        if model.mgf_domain_edge < INF:
            return NormEstimate(
                INF, "tau", e, rel_tol,
                "not dominated: mgf domain is bounded while phi_q is finite",
            )
        if model.cgf_growth_order > q + 1e-12:
            return NormEstimate(
                INF, "tau", e, rel_tol,
                f"not dominated: cumulant growth order "
                f"{model.cgf_growth_order:g} exceeds q = {q:g}",
            )

    def feasible(k):
        margin, _ = _tau_worst_margin(model, q, k, t_budget, refine=True)
        return margin <= TAU_MARGIN_TOL

    try:
        k = numerics.monotone_bisect(
            numerics.BisectionSpec(feasible, lo=sh / 4.0, hi=sh * 4.0, rel_tol=rel_tol)
        )
    except NoBracketError as nb:
        if nb.side == "hi":
            return NormEstimate(INF, "tau", e, rel_tol, "no feasible K found")
        return NormEstimate(0.0, "tau", e, rel_tol, "feasible for every K > 0")
    margin, worst_t = _tau_worst_margin(model, q, k, t_budget, refine=True)
    return NormEstimate(
        k, "tau", e, rel_tol,
        f"worst mgf-domination margin {margin:.3e} at t = {worst_t:.6g}",
    )


def compute_norm(model, kind, p, rel_tol=1e-9):
    """Dispatch by kind: luxemburg, tail, moment or tau."""
    if kind == "luxemburg":
        return luxemburg_norm(model, p, rel_tol)
    if kind == "tail":
        return tail_norm(model, p)
    if kind == "moment":
        return moment_norm(model, p)
    if kind == "tau":
        return tau_norm(model, p, rel_tol)
    raise ValueError(f"unknown norm kind: {kind!r}")
