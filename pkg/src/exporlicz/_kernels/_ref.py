"""Pure-Python kernel implementations (numpy-vectorized).

Same contract as the compiled twin in ``_fast.pyx``; selected at import
time by ``exporlicz._kernels`` when the extension is unavailable or the
EXPORLICZ_BACKEND environment variable asks for it.
"""

import math

import numpy as np

# exp() arguments above this saturate to the +inf sentinel.
EXP_CAP = 700.0

_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def phi_scalar(p, x):
    """Standardized power function: x^2/2 inside [-1, 1], |x|^p/p - 1/p + 1/2
    outside (an infinite wall outside when p = inf)."""
    ax = abs(x)
    if ax <= 1.0:
        return 0.5 * (ax * ax)
    if p == math.inf:
        return math.inf
    if p * math.log(ax) > EXP_CAP:
        return math.inf
    return ax ** p / p - 1.0 / p + 0.5


def phi_grid(p, xs):
    """Vectorized phi_scalar over a float array."""
    ax = np.abs(np.asarray(xs, dtype=float))
    out = np.empty_like(ax)
    inner = ax <= 1.0
    out[inner] = 0.5 * (ax[inner] * ax[inner])
    outer = ~inner
    if p == math.inf:
        out[outer] = np.inf
    else:
        ao = ax[outer]
        with np.errstate(over="ignore"):
            vals = ao ** p / p - 1.0 / p + 0.5
        vals[p * np.log(ao) > EXP_CAP] = np.inf
        out[outer] = vals
    return out


def weighted_exp_sum(args, weights):
    """sum_i w_i * exp(a_i), saturating to +inf once the stabilized exponent
    passes EXP_CAP.  Entries with zero weight are ignored even at a = +inf."""
    args = np.asarray(args, dtype=float)
    weights = np.asarray(weights, dtype=float)
    live = weights > 0.0
    if not live.any():
        return 0.0
    a = args[live]
    w = weights[live]
    m = float(np.max(a))
    if m == math.inf:
        return math.inf
    if m == -math.inf:
        return 0.0
    s = float(np.dot(w, np.exp(a - m)))
    if s <= 0.0:
        return 0.0
    total = m + math.log(s)
    if total > EXP_CAP:
        return math.inf
    return math.exp(total)


def log_sum_exp(values, weights):
    """log(sum_i w_i * exp(v_i)) without overflow; -inf for an empty sum."""
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    live = weights > 0.0
    if not live.any():
        return -math.inf
    v = values[live]
    w = weights[live]
    m = float(np.max(v))
    if m == math.inf:
        return math.inf
    if m == -math.inf:
        return -math.inf
    s = float(np.dot(w, np.exp(v - m)))
    if s <= 0.0:
        return -math.inf
    return m + math.log(s)


def tau_margin(q, k, ts, ln_mgf):
    """max_i [ln_mgf_i - phi_q(k*t_i)].

    Where phi_q(k*t) = +inf the constraint is vacuous, so the point
    contributes -inf regardless of ln_mgf.  Returns -inf for empty input.
    """
    ts = np.asarray(ts, dtype=float)
    ln_mgf = np.asarray(ln_mgf, dtype=float)
    if ts.size == 0:
        return -math.inf
    ph = phi_grid(q, k * ts)
    wall = np.isinf(ph)
    with np.errstate(invalid="ignore"):
        margins = np.where(wall, -np.inf, ln_mgf - ph)
    return float(np.max(margins))


def lgamma(x):
    """Natural log of the gamma function (Lanczos series, g = 7)."""
    if x <= 0.0:
        raise ValueError("lgamma requires x > 0")
    if x < 0.5:
        # reflection keeps the series argument comfortably positive
        return math.log(math.pi / math.sin(math.pi * x)) - lgamma(1.0 - x)
    z = x - 1.0
    base = z + _LANCZOS_G + 0.5
    s = _LANCZOS_C[0]
    for i in range(1, 9):
        s += _LANCZOS_C[i] / (z + i)
    return _HALF_LOG_2PI + (z + 0.5) * math.log(base) - base + math.log(s)
