"""The standardized power-function family and its convex conjugates.

phi_p is quadratic (x^2/2) on [-1, 1] and power-type (|x|^p/p - 1/p + 1/2)
outside; phi_inf keeps the quadratic core and walls off |x| > 1 with +inf.
psi_p(x) = exp(|x|^p) - 1 generates the exponential Orlicz spaces.  The
convex conjugate of phi_p is phi_q with 1/p + 1/q = 1 (phi_1* = phi_inf),
and ``legendre_numeric`` recomputes the conjugate by direct supremum search
so the closed form can be cross-checked.
"""

import math
from dataclasses import dataclass
from functools import cached_property

from . import _kernels, numerics
from .errors import InvalidExponentError, InvalidInputError, UnsupportedKindError

INF = math.inf


def _check_p(p):
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise InvalidExponentError(f"exponent must lie in [1, inf], got {p}")
    return p


@dataclass(frozen=True)
class Exponent:
    """An exponent p in [1, inf] together with its conjugate q.

    1/p + 1/q = 1, with the conventions q(1) = inf and q(inf) = 1.
    """

    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))

    @cached_property
    def q(self):
        p = self.p
        if p == 1.0:
            return INF
        if p == INF:
            return 1.0
        return p / (p - 1.0)

    @property
    def is_finite(self):
        return self.p != INF

    def conjugate(self):
        return Exponent(self.q)

    def __repr__(self):
        return f"Exponent(p={self.p}, q={self.q})"


def as_exponent(p):
    """Coerce a number or Exponent to an Exponent."""
    if isinstance(p, Exponent):
        return p
    return Exponent(float(p))


def conjugate_exponent(p):
    """The (p, q) pair with 1/p + 1/q = 1; q = inf at p = 1 and q = 1 at
    p = inf."""
    return as_exponent(p)


def phi(p, x):
    """Evaluate phi_p(x).

    x^2/2 for |x| <= 1; |x|^p/p - 1/p + 1/2 for |x| > 1 when p is finite;
    +inf for |x| > 1 when p = inf.  Both branches meet at phi_p(1) = 1/2
    with slope 1.
    """
    e = as_exponent(p)
    return _kernels.phi_scalar(e.p, float(x))


def phi_deriv(p, x):
    """Derivative of phi_p: x on [-1, 1], sign(x)|x|^{p-1} outside.

    Outside [-1, 1] at p = inf the function is +inf, so the derivative is
    undefined there (returns nan).
    """
    e = as_exponent(p)
    ax = abs(x)
    s = 1.0 if x >= 0.0 else -1.0
    if ax <= 1.0:
        return x
    if e.p == INF:
        return math.nan
    return s * ax ** (e.p - 1.0)


def psi(p, x):
    """psi_p(x) = exp(|x|^p) - 1, saturating to +inf above the exp cap."""
    e = as_exponent(p)
    if e.p == INF:
        raise UnsupportedKindError("psi is only defined for finite p")
    ax = abs(float(x))
    if ax == 0.0:
        return 0.0
    arg = e.p * math.log(ax)
    if arg > _kernels.EXP_CAP:
        return INF
    t = math.exp(arg)
    if t > _kernels.EXP_CAP:
        return INF
    return math.expm1(t)


def psi_deriv(p, x):
    """Derivative of psi_p; 0 at x = 0 (symmetric subgradient)."""
    e = as_exponent(p)
    if e.p == INF:
        raise UnsupportedKindError("psi is only defined for finite p")
    ax = abs(float(x))
    if ax == 0.0:
        return 0.0
    t = ax ** e.p
    if t > _kernels.EXP_CAP:
        return math.copysign(INF, x)
    return math.copysign(e.p * ax ** (e.p - 1.0) * math.exp(t), x)


@dataclass(frozen=True)
class PhiFunction:
    """An evaluable even convex function with derivative and kind metadata."""

    kind: str  # "phi_p", "psi_p" or "generic"
    exponent: Exponent | None
    eval: callable
    deriv: callable

    def __call__(self, x):
        return self.eval(x)


def phi_function(p):
    e = as_exponent(p)
    return PhiFunction(
        kind="phi_p",
        exponent=e,
        eval=lambda x: _kernels.phi_scalar(e.p, float(x)),
        deriv=lambda x: phi_deriv(e, x),
    )


def psi_function(p):
    e = as_exponent(p)
    if e.p == INF:
        raise UnsupportedKindError("psi is only defined for finite p")
    return PhiFunction(
        kind="psi_p",
        exponent=e,
        eval=lambda x: psi(e, x),
        deriv=lambda x: psi_deriv(e, x),
    )


def generic_function(eval_fn, deriv_fn=None):
    if deriv_fn is None:
        h = 1e-6

        def deriv_fn(x, _f=eval_fn):
            return (_f(x + h) - _f(x - h)) / (2.0 * h)

    return PhiFunction(kind="generic", exponent=None, eval=eval_fn, deriv=deriv_fn)


def _spot_check_convex(f, bound):
    """Cheap monotone-slope check; raises on clear non-convexity."""
    xs = [bound * (k / 8.0) for k in range(1, 9)]
    slopes = []
    prev_x, prev_v = 0.0, f.eval(0.0)
    for x in xs:
        v = f.eval(x)
        if math.isinf(v):
            break
        slopes.append((v - prev_v) / (x - prev_x))
        prev_x, prev_v = x, v
    tol = 1e-9 * (1.0 + max((abs(s) for s in slopes), default=0.0))
    for s0, s1 in zip(slopes, slopes[1:]):
        if s1 < s0 - tol:
            raise InvalidInputError("function fails the convexity spot check")


def default_search_bound(f, y):
    """Search radius for the conjugate supremum.

    For phi_p with finite p > 1 the maximizer of x*y - phi_p(x) is
    y^{1/(p-1)} = y^{q-1}, so 10*(1+|y|)^{q-1} (clamped to [10, 1e6])
    brackets it comfortably; otherwise fall back to a fixed radius.
    """
    if f.kind == "phi_p" and f.exponent is not None and 1.0 < f.exponent.p < INF:
        b = 10.0 * (1.0 + abs(y)) ** (f.exponent.q - 1.0)
        return min(max(b, 10.0), 1e6)
    return 1e3


def legendre_numeric(f, y, search_bound=None):
    """Numerical convex conjugate f*(y) = sup_x [x*y - f(x)] for even convex f.

    Grid bracketing plus golden-section refinement of the concave objective
    on [0, search_bound] (evenness reduces to x >= 0 after flipping the sign
    of y).  Reports +inf when the objective is still climbing at the search
    boundary while f is finite there, which is how an unbounded conjugate
    (e.g. phi_1* beyond |y| = 1) shows up.
    """
    y = float(y)
    if search_bound is None:
        search_bound = default_search_bound(f, y)
    if not search_bound > 0.0:
        raise InvalidInputError("search_bound must be positive")
    _spot_check_convex(f, search_bound)

    ay = abs(y)  # even f: sup over x of x*y - f(x) = sup over x>=0 of x*ay - f(x)

    def obj(x):
        v = f.eval(x)
        if math.isinf(v):
            return -INF
        return x * ay - v

    at_zero = obj(0.0)
    best_x, best_v = numerics.sup_search(
        obj, 0.0, search_bound, grid_points=128, refine_iters=120
    )
    if at_zero > best_v:
        best_x, best_v = 0.0, at_zero
    edge = obj(search_bound)
    if edge > best_v:
        best_x, best_v = search_bound, edge

    # divergence test: finite f at the boundary with the objective still rising
    f_edge = f.eval(search_bound)
    if not math.isinf(f_edge):
        inner = obj(search_bound * (1.0 - 1e-6))
        slope = (edge - inner) / (search_bound * 1e-6)
        if edge >= best_v - 1e-12 and slope > 1e-9 * (1.0 + abs(edge)):
            return INF
    return best_v
