"""Equivalence constants, tail-bound curves, and a bound-vs-truth verifier.

The two constants tie the Luxemburg norm to the mgf-domination norm in both
directions; the curve constructors turn a norm value into an explicit tail
bound, including the classical two-sided Hoeffding bound and its
complementary piecewise form (quadratic out to t = 2a, identically zero
beyond).  ``verify_bound`` compares any curve against a model's exact tail
on a grid and reports every violation.

For sums of independent bounded variables the complementary curve must use
the l1 parameter sum(a_k): the almost-sure bound of the sum is sum(a_k),
not the root-sum-square, and with the smaller parameter the zero branch
would start inside the sum's actual support.  ``hoeffding_sum_params``
returns both parameters so the classic curve can keep the sharper l2 value.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import numerics
from .errors import InvalidExponentError, InvalidInputError
from .phi_core import as_exponent, phi

INF = math.inf

# test hook: the battery's deliberate-failure path scales this down
_TAU_UPPER_SCALE = 1.0


def tau_upper_const(p):
    """c(p) in tau_norm <= c(p) * luxemburg_norm.

    2*sqrt(2) at p = 1; [(8/p)^(q/p) + (2 sqrt 2)^q]^(1/q) for p > 1.
    Evaluated in log space so q near 1/(p-1) blowups stay finite.
    """
    e = as_exponent(p)
    if e.p == 1.0:
        return _TAU_UPPER_SCALE * 2.0 * math.sqrt(2.0)
    q = e.q
    log_terms = np.array([
        (q / e.p) * math.log(8.0 / e.p),
        q * math.log(2.0 * math.sqrt(2.0)),
    ])
    return _TAU_UPPER_SCALE * math.exp(numerics.log_sum_exp(log_terms) / q)


def luxemburg_upper_const(p):
    """c(p) in luxemburg_norm <= c(p) * tau_norm.

    3^(1/p) * p^(1/p) for p >= 2 and 3^(1/p) * 2^(1/p) for 1 <= p < 2.
    """
    e = as_exponent(p)
    if e.p == INF:
        raise InvalidExponentError("constant defined for finite p")
    lp = e.p if e.p >= 2.0 else 2.0
    return (3.0 * lp) ** (1.0 / e.p)


@dataclass(frozen=True)
class BoundCurve:
    """A named tail-bound function t >= 0 -> bound value."""

    name: str
    params: dict
    eval: Callable[[float], float]
    provenance: str

    def __call__(self, t):
        return self.eval(t)

    def table(self, ts):
        return np.array([self.eval(float(t)) for t in np.asarray(ts)])


def tail_from_tau(p, k):
    """Tail bound 2 exp(-phi_p(t/K)) implied by an mgf-domination constant K
    (for p = inf the curve vanishes beyond t = K)."""
    e = as_exponent(p)
    if not k > 0.0:
        raise InvalidInputError("K must be positive")

    def ev(t):
        ph = phi(e, t / k)
        return 0.0 if math.isinf(ph) else 2.0 * math.exp(-ph)

    return BoundCurve(
        name="tail_from_tau",
        params={"p": e.p, "K": k},
        eval=ev,
        provenance="2*exp(-phi_p(t/K)) from the Chernoff step at the "
        "mgf-domination constant",
    )


def exp_power_tail_curve(p, scale):
    """Stretched-exponential tail bound 2 exp(-(t/L)^p)."""
    e = as_exponent(p)
    if e.p == INF:
        raise InvalidExponentError("finite p required")
    if not scale > 0.0:
        raise InvalidInputError("L must be positive")

    def ev(t):
        u = e.p * math.log(t / scale) if t > 0.0 else -INF
        if u > numerics.EXP_CAP:
            return 0.0
        return 2.0 * math.exp(-math.exp(u)) if u > -INF else 2.0

    return BoundCurve(
        name="exp_power_tail",
        params={"p": e.p, "L": scale},
        eval=ev,
        provenance="2*exp(-(t/L)^p)",
    )


def hoeffding_classic(a):
    """Two-sided Hoeffding tail bound 2 exp(-t^2 / (2 a^2)) for a variable
    bounded by a."""
    if not a > 0.0:
        raise InvalidInputError("a must be positive")
    return BoundCurve(
        name="hoeffding_classic",
        params={"a": a},
        eval=lambda t: 2.0 * math.exp(-(t * t) / (2.0 * a * a)),
        provenance="2*exp(-t^2/(2a^2))",
    )


def hoeffding_complementary(a):
    """Complementary Hoeffding bound: 2 exp(-t^2 / (8 a^2)) up to t = 2a and
    exactly zero beyond (requires P(|X| <= a) = 1, asserted by the caller)."""
    if not a > 0.0:
        raise InvalidInputError("a must be positive")

    def ev(t):
        if t > 2.0 * a:
            return 0.0
        return 2.0 * math.exp(-(t * t) / (8.0 * a * a))

    return BoundCurve(
        name="hoeffding_complementary",
        params={"a": a},
        eval=ev,
        provenance="2*exp(-phi_inf(t/(2a))): quadratic on [0, 2a], 0 beyond",
    )


def hoeffding_sum_params(a_list):
    """(l2, l1) parameters for a sum of independent variables bounded by a_k.

    The l2 value sqrt(sum a_k^2) feeds the classic curve; the l1 value
    sum(a_k) is the almost-sure bound of the sum and is the only safe
    parameter for the complementary curve's zero branch.
    """
    arr = np.asarray(a_list, dtype=float)
    if arr.size == 0:
        raise InvalidInputError("need at least one summand bound")
    if np.any(arr <= 0.0):
        raise InvalidInputError("all summand bounds must be positive")
    return float(np.sqrt(np.sum(arr ** 2))), float(np.sum(arr))


@dataclass(frozen=True)
class VerificationReport:
    """Pointwise comparison of an exact tail against a bound curve."""

    t_grid: np.ndarray
    truth: np.ndarray
    bound: np.ndarray
    violations: list  # (t, truth, bound) where truth > bound + tol
    max_gap: float  # max over grid of truth - bound

    @property
    def ok(self):
        return not self.violations


def verify_bound(model, curve, t_grid, tol=1e-12):
    """Compare model.tail against curve on a grid; collect violations
    beyond tol and the worst gap."""
    ts = np.asarray(t_grid, dtype=float)
    if ts.size == 0 or np.any(np.diff(ts) <= 0.0):
        raise InvalidInputError("t_grid must be nonempty and increasing")
    truth = np.array([model.tail(float(t)) for t in ts])
    bound = curve.table(ts)
    gaps = truth - bound
    bad = gaps > tol
    violations = [
        (float(ts[i]), float(truth[i]), float(bound[i]))
        for i in np.nonzero(bad)[0]
    ]
    return VerificationReport(
        t_grid=ts,
        truth=truth,
        bound=bound,
        violations=violations,
        max_gap=float(np.max(gaps)),
    )
