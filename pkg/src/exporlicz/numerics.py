"""Shared numerical machinery.

Monotone-predicate bisection (every "smallest feasible K" in the package goes
through here), bounded supremum search with local refinement, log-space
adaptive Gauss-Kronrod quadrature for expectations of exponential integrands,
and thin re-exports of the kernel special functions.
"""

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DomainError, EmptyDomainError, NoBracketError

EXP_CAP = _kernels.EXP_CAP

# How far bracket expansion / shrinking may travel before giving up.
_BRACKET_SPAN = 2.0 ** 60


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return _kernels.lgamma(float(x))


def log_sum_exp(values, weights=None):
    """log(sum w_i exp(v_i)), overflow-safe. Unit weights when omitted."""
    values = np.asarray(values, dtype=float)
    if weights is None:
        weights = np.ones_like(values)
    return _kernels.log_sum_exp(values, weights)


@dataclass
class BisectionSpec:
    """A monotone feasibility problem: infeasible below some threshold K*,
    feasible above it.  ``monotone_bisect`` returns a certified-feasible K
    within rel_tol of K*."""

    predicate: Callable[[float], bool]
    lo: float
    hi: float
    rel_tol: float = 1e-9
    max_iter: int = 240

    def __post_init__(self):
        if not (self.lo > 0.0 and self.hi > 0.0 and self.lo < self.hi):
            raise DomainError("bisection bracket must satisfy 0 < lo < hi")
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError("rel_tol must lie in (0, 1)")


def monotone_bisect(spec):
    """Smallest feasible point of a monotone predicate.

    The initial bracket is repaired automatically: hi doubles until feasible
    (up to 2^60 * lo), lo halves until infeasible (down to lo / 2^60).
    Returns the upper end of the final bracket, so the result is always
    certified feasible; the lower end, at most rel_tol below, is certified
    infeasible.
    """
    pred = spec.predicate
    lo, hi = float(spec.lo), float(spec.hi)
    cap_hi = lo * _BRACKET_SPAN
    cap_lo = hi / _BRACKET_SPAN

    while not pred(hi):
        lo = max(lo, hi)
        hi *= 2.0
        if hi > cap_hi:
            raise NoBracketError(
                f"predicate infeasible everywhere up to {hi:.3e}", side="hi"
            )
    while pred(lo):
        hi = min(hi, lo)
        lo *= 0.5
        if lo < cap_lo:
            raise NoBracketError(
                f"predicate feasible everywhere down to {lo:.3e}", side="lo"
            )

    for _ in range(spec.max_iter):
        if hi - lo <= spec.rel_tol * hi:
            return hi
        mid = math.sqrt(lo * hi)
        if not (lo < mid < hi):
            return hi
        if pred(mid):
            hi = mid
        else:
            lo = mid
    raise ConvergenceError(
        f"bisection did not converge below rel_tol={spec.rel_tol}", lo=lo, hi=hi
    )


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, a, b, iters):
    """Golden-section maximization on [a, b]; tolerates -inf values."""
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_v = (c, fc) if fc >= fd else (d, fd)
    for _ in range(iters):
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
        else:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        if fc > best_v:
            best_x, best_v = c, fc
        if fd > best_v:
            best_x, best_v = d, fd
    return best_x, best_v


def sup_search(f, lo, hi, grid_points=64, refine_iters=80):
    """Approximate (argmax, max) of f on [lo, hi].

    Coarse grid (geometric when the interval spans decades of positive
    values, linear otherwise) followed by golden-section refinement around
    the best cell.  Raises EmptyDomainError when f is -inf on the whole grid.
    """
    if grid_points < 16:
        raise DomainError("grid_points must be at least 16")
    if not hi > lo:
        raise DomainError("need hi > lo")
    if lo > 0.0 and hi / lo >= 64.0:
        xs = np.geomspace(lo, hi, grid_points)
    else:
        xs = np.linspace(lo, hi, grid_points)
    vals = np.array([f(x) for x in xs], dtype=float)
    if np.all(np.isneginf(vals)):
        raise EmptyDomainError("objective is -inf on the entire domain")
    i = int(np.nanargmax(vals))
    best_x, best_v = float(xs[i]), float(vals[i])
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, len(xs) - 1)])
    if b > a:
        rx, rv = _golden_max(f, a, b, refine_iters)
        if rv > best_v:
            best_x, best_v = rx, rv
    return best_x, best_v


# Gauss-7 / Kronrod-15 rule on [-1, 1].
_KRONROD_X = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813,
])
_KRONROD_W = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
])
_GAUSS_IDX = np.array([1, 3, 5, 7, 9, 11, 13])
_GAUSS_W = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870,
])


def _panel(log_f, a, b):
    h = 0.5 * (b - a)
    xs = 0.5 * (a + b) + h * _KRONROD_X
    lf = np.asarray(log_f(xs), dtype=float)
    log_k = _kernels.log_sum_exp(lf, _KRONROD_W * h)
    log_g = _kernels.log_sum_exp(lf[_GAUSS_IDX], _GAUSS_W * h)
    if math.isinf(log_k) and log_k > 0:
        return log_k, math.inf
    if log_k == -math.inf:
        return log_k, 0.0
    # relative discrepancy between the embedded rules
    err_rel = abs(1.0 - math.exp(min(log_g - log_k, 50.0))) if log_g > -math.inf else 1.0
    return log_k, err_rel


def _panel_priority(log_i, err_rel):
    # heap key: negated log of the panel's absolute error
    if log_i == -math.inf:
        return 1e6
    return -(math.log(max(err_rel, 1e-300)) + log_i)


def log_adaptive_quad(log_f, a, b, rel_tol=1e-11, max_panels=4000):
    """Integral of exp(log_f) over [a, b], adaptively refined, in log space.

    ``log_f`` maps a node array to log-integrand values (-inf allowed).
    Returns (log_integral, rel_err_estimate); log_integral is +inf only when
    the integrand itself is infinite at a node.  Huge-but-finite integrals
    stay exact in log space; converting to a value saturates downstream.
    """
    if not b > a:
        raise DomainError("need b > a")

    def _tot(heap):
        total = log_sum_exp([e[4] for e in heap])
        if total == -math.inf:
            return total, 0.0
        err = sum(
            e[5] * math.exp(min(e[4] - total, 0.0)) for e in heap
        )
        return total, err

    log_i, err = _panel(log_f, a, b)
    if math.isinf(log_i) and log_i > 0:
        return math.inf, 0.0
    # heap entries: (priority, tiebreak, a, b, log_integral, err_rel)
    heap = [(_panel_priority(log_i, err), a, a, b, log_i, err)]
    n_panels = 1
    while n_panels < max_panels:
        total, tot_err = _tot(heap)
        if total == -math.inf or tot_err <= rel_tol:
            return total, tot_err
        prio, _, pa, pb, plog, perr = heapq.heappop(heap)
        if prio >= 1e6:
            # every remaining panel is frozen; no further refinement possible
            heapq.heappush(heap, (prio, pa, pa, pb, plog, perr))
            break
        if pb - pa <= 1e-14 * (abs(pa) + abs(pb) + 1.0):
            # cannot subdivide further; freeze this panel at lowest priority
            heapq.heappush(heap, (1e6, pa, pa, pb, plog, perr))
            continue
        mid = 0.5 * (pa + pb)
        l1, e1 = _panel(log_f, pa, mid)
        l2, e2 = _panel(log_f, mid, pb)
        if (math.isinf(l1) and l1 > 0) or (math.isinf(l2) and l2 > 0):
            return math.inf, 0.0
        heapq.heappush(heap, (_panel_priority(l1, e1), pa, pa, mid, l1, e1))
        heapq.heappush(heap, (_panel_priority(l2, e2), mid, mid, pb, l2, e2))
        n_panels += 1
    return _tot(heap)


def find_truncation(log_f, start, drop=46.0, growth=1.5, max_steps=400):
    """Upper integration limit for a log-integrand that eventually decays.

    Walks outward from ``start`` until the integrand has fallen ``drop`` nats
    below the largest value seen (so the discarded tail is negligible) and is
    locally decreasing.  Only valid for integrands known to be integrable.
    """
    t = float(start)
    peak = -math.inf
    for _ in range(max_steps):
        v = float(log_f(np.array([t]))[0])
        peak = max(peak, v)
        if v < peak - drop:
            prev = float(log_f(np.array([t / growth]))[0])
            if v <= prev:
                return t
        t *= growth
    return t
