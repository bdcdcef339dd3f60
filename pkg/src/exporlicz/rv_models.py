"""Distribution models and the four expectation functionals the norms need.

Every model exposes the absolute tail P(|X| >= t), absolute moments
E|X|^alpha, the moment generating function E exp(tX), and exponential power
moments E exp(|X/K|^p), each as an ExpectationResult carrying the evaluation
method and an error estimate.  Analytic families use closed forms where
standard and log-space adaptive quadrature otherwise; empirical samples are
evaluated as exact finite averages, so results are reproducible bit for bit
from a sample file.

Models additionally publish the structural facts the norm solvers need to
return exact +inf results instead of chasing divergent integrals: the
essential supremum, the mgf domain edge, the growth order of the cumulant
function, and the tail decay order.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sps

from . import _kernels, numerics
from .errors import InvalidInputError

INF = math.inf
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class ExpectationResult:
    """Value of an expectation functional plus how it was obtained."""

    value: float
    method: str  # "closed_form" | "quadrature" | "finite_sum"
    abs_error_estimate: float = 0.0

    def __float__(self):
        return float(self.value)


def _closed(v):
    return ExpectationResult(float(v), "closed_form", 0.0)


def _finite(v):
    return ExpectationResult(float(v), "finite_sum", 0.0)


def _ln_cosh(z):
    # series below 0.05: the direct formula loses absolute accuracy to
    # cancellation right where the domination margins are tightest
    az = np.abs(np.asarray(z, dtype=float))
    out = np.empty_like(az)
    small = az < 0.05
    u2 = az[small] ** 2
    out[small] = np.log1p(u2 / 2.0 + u2 ** 2 / 24.0 + u2 ** 3 / 720.0)
    big = az[~small]
    out[~small] = big + np.log1p(np.exp(-2.0 * big)) - _LN2
    return out


def _exp_or_inf(logv):
    if logv > _kernels.EXP_CAP:
        return INF
    if logv == -INF:
        return 0.0
    return math.exp(logv)


def _sat_exp_pow(ratio, p):
    """exp(ratio**p) for ratio >= 0, saturating instead of overflowing."""
    if ratio == 0.0:
        return 1.0
    if ratio > 1.0 and p * math.log(ratio) > math.log(_kernels.EXP_CAP):
        return INF
    return _exp_or_inf(ratio ** p)


class RandomVariableModel:
    """Common interface; concrete families override the closed forms."""

    family = "generic"
    is_symmetric = False

    # ---- structural metadata -------------------------------------------
    @property
    def mean(self):
        raise NotImplementedError

    @property
    def essential_sup(self):
        """Smallest a with P(|X| <= a) = 1 (inf when unbounded)."""
        raise NotImplementedError

    @property
    def mgf_domain_edge(self):
        """E exp(tX) is finite for |t| < edge; inf when the mgf is entire."""
        return INF

    @property
    def cgf_growth_order(self):
        """ln E exp(tX) grows like |t|^order as t -> inf (when entire)."""
        raise NotImplementedError

    @property
    def tail_decay_order(self):
        """Largest r such that the tail decays at least like exp(-(t/c)^r);
        inf for bounded variables."""
        return INF

    @property
    def scale_hint(self):
        """Rough magnitude of |X| used to seed brackets and grids."""
        raise NotImplementedError

    @property
    def atoms(self):
        """(values, probabilities) for discrete models, else None."""
        return None

    # ---- functionals ----------------------------------------------------
    def tail(self, t):
        raise NotImplementedError

    def log_abs_moment(self, alpha):
        raise NotImplementedError

    def abs_moment(self, alpha):
        if alpha < 1.0:
            raise InvalidInputError("abs_moment requires alpha >= 1")
        return _closed(_exp_or_inf(self.log_abs_moment(alpha)))

    def ln_mgf(self, t):
        raise NotImplementedError

    def ln_mgf_grid(self, ts):
        return np.array([self.ln_mgf(float(t)) for t in np.asarray(ts)])

    def mgf(self, t):
        return _closed(_exp_or_inf(self.ln_mgf(t)))

    def exp_pow_moment(self, p, k):
        raise NotImplementedError

    # ---- transforms ------------------------------------------------------
    def center(self):
        if self.is_symmetric:
            return self
        raise NotImplementedError

    def scaled(self, c):
        raise NotImplementedError

    # ---- helpers ---------------------------------------------------------
    def quantile_abs(self, level):
        """Smallest t with P(|X| >= t) <= level."""
        if self.essential_sup < INF:
            return self.essential_sup
        hi = max(self.scale_hint, 1e-300)
        for _ in range(600):
            if self.tail(hi) <= level:
                break
            hi *= 2.0
        lo = 0.0
        for _ in range(90):
            mid = 0.5 * (lo + hi)
            if self.tail(mid) <= level:
                hi = mid
            else:
                lo = mid
        return hi

    def describe(self):
        return self.family


class _DiscreteModel(RandomVariableModel):
    """Finite-support base: exact sums for everything."""

    def __init__(self, values, probs):
        values = np.asarray(values, dtype=float)
        probs = np.asarray(probs, dtype=float)
        if values.size == 0:
            raise InvalidInputError("support must be nonempty")
        if values.size != probs.size:
            raise InvalidInputError("support and weights differ in length")
        if np.any(probs <= 0.0):
            raise InvalidInputError("probability weights must be positive")
        if abs(float(probs.sum()) - 1.0) > 1e-12:
            raise InvalidInputError("probability weights must sum to 1")
        order = np.argsort(values)
        self._x = values[order]
        self._w = probs[order]

    @property
    def mean(self):
        return float(np.dot(self._x, self._w))

    @property
    def essential_sup(self):
        return float(np.max(np.abs(self._x)))

    @property
    def cgf_growth_order(self):
        return 1.0 if self.essential_sup > 0.0 else 0.0

    @property
    def scale_hint(self):
        return float(math.sqrt(np.dot(self._x ** 2, self._w)))

    @property
    def atoms(self):
        return self._x.copy(), self._w.copy()

    def tail(self, t):
        return float(self._w[np.abs(self._x) >= t].sum())

    def log_abs_moment(self, alpha):
        ax = np.abs(self._x)
        with np.errstate(divide="ignore"):
            logs = alpha * np.log(ax)
        return _kernels.log_sum_exp(logs, self._w)

    def ln_mgf(self, t):
        return _kernels.log_sum_exp(t * self._x, self._w)

    def ln_mgf_grid(self, ts):
        ts = np.asarray(ts, dtype=float)
        out = np.empty(ts.size)
        block = max(1, int(2_000_000 // max(self._x.size, 1)))
        for i in range(0, ts.size, block):
            chunk = ts[i : i + block, None] * self._x[None, :]
            m = np.max(chunk, axis=1)
            out[i : i + block] = m + np.log(
                np.exp(chunk - m[:, None]) @ self._w
            )
        return out

    def mgf(self, t):
        return _finite(_exp_or_inf(self.ln_mgf(t)))

    def abs_moment(self, alpha):
        if alpha < 1.0:
            raise InvalidInputError("abs_moment requires alpha >= 1")
        return _finite(_exp_or_inf(self.log_abs_moment(alpha)))

    def exp_pow_moment(self, p, k):
        with np.errstate(over="ignore"):
            args = (np.abs(self._x) / k) ** p
        return _finite(_kernels.weighted_exp_sum(args, self._w))


class PointMass(RandomVariableModel):
    """X = c almost surely."""

    family = "pointmass"

    def __init__(self, c):
        self.c = float(c)

    @property
    def is_symmetric(self):
        return self.c == 0.0

    @property
    def mean(self):
        return self.c

    @property
    def essential_sup(self):
        return abs(self.c)

    @property
    def cgf_growth_order(self):
        return 1.0 if self.c != 0.0 else 0.0

    @property
    def scale_hint(self):
        return abs(self.c)

    @property
    def atoms(self):
        return np.array([self.c]), np.array([1.0])

    def tail(self, t):
        return 1.0 if t <= abs(self.c) else 0.0

    def log_abs_moment(self, alpha):
        return alpha * math.log(abs(self.c)) if self.c != 0.0 else -INF

    def ln_mgf(self, t):
        return t * self.c

    def ln_mgf_grid(self, ts):
        return np.asarray(ts, dtype=float) * self.c

    def exp_pow_moment(self, p, k):
        return _closed(_sat_exp_pow(abs(self.c) / k, p))

    def center(self):
        return PointMass(0.0)

    def scaled(self, c):
        return PointMass(self.c * c)

    def describe(self):
        return f"pointmass(c={self.c:g})"


class Rademacher(RandomVariableModel):
    """X = +-scale with probability 1/2 each."""

    family = "rademacher"
    is_symmetric = True

    def __init__(self, scale=1.0):
        if not scale > 0.0:
            raise InvalidInputError("scale must be positive")
        self.scale = float(scale)

    @property
    def mean(self):
        return 0.0

    @property
    def essential_sup(self):
        return self.scale

    @property
    def cgf_growth_order(self):
        return 1.0

    @property
    def scale_hint(self):
        return self.scale

    @property
    def atoms(self):
        return (
            np.array([-self.scale, self.scale]),
            np.array([0.5, 0.5]),
        )

    def tail(self, t):
        return 1.0 if t <= self.scale else 0.0

    def log_abs_moment(self, alpha):
        return alpha * math.log(self.scale)

    def ln_mgf(self, t):
        return float(_ln_cosh(self.scale * t))

    def ln_mgf_grid(self, ts):
        return _ln_cosh(self.scale * np.asarray(ts, dtype=float))

    def exp_pow_moment(self, p, k):
        return _closed(_sat_exp_pow(self.scale / k, p))

    def scaled(self, c):
        return Rademacher(self.scale * c)

    def describe(self):
        return f"rademacher(scale={self.scale:g})"


class UniformSym(RandomVariableModel):
    """Uniform on [-a, a]."""

    family = "uniform"
    is_symmetric = True

    def __init__(self, a):
        if not a > 0.0:
            raise InvalidInputError("half-width a must be positive")
        self.a = float(a)

    @property
    def mean(self):
        return 0.0

    @property
    def essential_sup(self):
        return self.a

    @property
    def cgf_growth_order(self):
        return 1.0

    @property
    def scale_hint(self):
        return self.a / math.sqrt(3.0)

    def tail(self, t):
        return max(0.0, 1.0 - t / self.a)

    def log_abs_moment(self, alpha):
        return alpha * math.log(self.a) - math.log(alpha + 1.0)

    def ln_mgf(self, t):
        # ln(sinh(u)/u); series below 0.05 avoids the 1 - exp(-2u)
        # cancellation that would swamp the domination margins
        u = abs(self.a * t)
        if u < 0.05:
            u2 = u * u
            return math.log1p(u2 / 6.0 + u2 * u2 / 120.0 + u2 ** 3 / 5040.0)
        return u + math.log1p(-math.exp(-2.0 * u)) - math.log(2.0 * u)

    def ln_mgf_grid(self, ts):
        u = np.abs(self.a * np.asarray(ts, dtype=float))
        small = u < 0.05
        out = np.empty_like(u)
        u2 = u[small] ** 2
        out[small] = np.log1p(u2 / 6.0 + u2 ** 2 / 120.0 + u2 ** 3 / 5040.0)
        ub = u[~small]
        out[~small] = ub + np.log1p(-np.exp(-2.0 * ub)) - np.log(2.0 * ub)
        return out

    def _half_log_pdf(self, u):
        u = np.asarray(u, dtype=float)
        return np.where((u >= 0.0) & (u <= self.a), -math.log(self.a), -INF)

    def exp_pow_moment(self, p, k):
        logv, err = numerics.log_adaptive_quad(
            lambda xs: (xs / k) ** p + self._half_log_pdf(xs), 0.0, self.a
        )
        v = _exp_or_inf(logv)
        return ExpectationResult(v, "quadrature", err * v if v < INF else 0.0)

    def scaled(self, c):
        return UniformSym(self.a * c)

    def describe(self):
        return f"uniform(a={self.a:g})"


class Gaussian(RandomVariableModel):
    """Centered normal with standard deviation sigma."""

    family = "gaussian"
    is_symmetric = True

    def __init__(self, sigma):
        if not sigma > 0.0:
            raise InvalidInputError("sigma must be positive")
        self.sigma = float(sigma)

    @property
    def mean(self):
        return 0.0

    @property
    def essential_sup(self):
        return INF

    @property
    def cgf_growth_order(self):
        return 2.0

    @property
    def tail_decay_order(self):
        return 2.0

    @property
    def scale_hint(self):
        return self.sigma

    def tail(self, t):
        return float(sps.erfc(t / (self.sigma * math.sqrt(2.0))))

    def log_abs_moment(self, alpha):
        return (
            alpha * math.log(self.sigma)
            + 0.5 * alpha * _LN2
            + numerics.log_gamma((alpha + 1.0) / 2.0)
            - 0.5 * math.log(math.pi)
        )

    def ln_mgf(self, t):
        return 0.5 * (self.sigma * t) ** 2

    def ln_mgf_grid(self, ts):
        return 0.5 * (self.sigma * np.asarray(ts, dtype=float)) ** 2

    def _half_log_pdf(self, u):
        u = np.asarray(u, dtype=float)
        return (
            _LN2
            - 0.5 * math.log(2.0 * math.pi)
            - math.log(self.sigma)
            - 0.5 * (u / self.sigma) ** 2
        )

    def exp_pow_moment(self, p, k):
        if p == 2.0:
            r = 2.0 * self.sigma ** 2 / k ** 2
            if r >= 1.0:
                return _closed(INF)
            return _closed(1.0 / math.sqrt(1.0 - r))
        if p > 2.0:
            return _closed(INF)

        def log_f(xs):
            return (xs / k) ** p + self._half_log_pdf(xs)

        hi = numerics.find_truncation(log_f, 4.0 * (self.sigma + k))
        logv, err = numerics.log_adaptive_quad(log_f, 0.0, hi)
        v = _exp_or_inf(logv)
        return ExpectationResult(v, "quadrature", err * v if v < INF else 0.0)

    def scaled(self, c):
        return Gaussian(self.sigma * c)

    def describe(self):
        return f"gaussian(sigma={self.sigma:g})"


class Laplace(RandomVariableModel):
    """Symmetric exponential with scale b: density exp(-|x|/b) / (2b)."""

    family = "laplace"
    is_symmetric = True

    def __init__(self, b):
        if not b > 0.0:
            raise InvalidInputError("scale b must be positive")
        self.b = float(b)

    @property
    def mean(self):
        return 0.0

    @property
    def essential_sup(self):
        return INF

    @property
    def mgf_domain_edge(self):
        return 1.0 / self.b

    @property
    def cgf_growth_order(self):
        return INF  # unused: the finite mgf domain edge decides first

    @property
    def tail_decay_order(self):
        return 1.0

    @property
    def scale_hint(self):
        return self.b * math.sqrt(2.0)

    def tail(self, t):
        return math.exp(-t / self.b)

    def log_abs_moment(self, alpha):
        return numerics.log_gamma(alpha + 1.0) + alpha * math.log(self.b)

    def ln_mgf(self, t):
        u = (self.b * t) ** 2
        if u >= 1.0:
            return INF
        return -math.log1p(-u)

    def ln_mgf_grid(self, ts):
        u = (self.b * np.asarray(ts, dtype=float)) ** 2
        out = np.full_like(u, INF)
        ok = u < 1.0
        out[ok] = -np.log1p(-u[ok])
        return out

    def _half_log_pdf(self, u):
        u = np.asarray(u, dtype=float)
        return -u / self.b - math.log(self.b)

    def exp_pow_moment(self, p, k):
        if p == 1.0:
            if k <= self.b:
                return _closed(INF)
            return _closed(k / (k - self.b))
        return _closed(INF)  # p > 1: integrand grows without bound

    def scaled(self, c):
        return Laplace(self.b * c)

    def describe(self):
        return f"laplace(b={self.b:g})"


class WeibullSym(RandomVariableModel):
    """Symmetric variable whose absolute tail is exactly
    min(1, 2 exp(-(t/scale)^p_tail)); |X| is supported on
    [scale * ln(2)^(1/p_tail), inf)."""

    family = "weibull"
    is_symmetric = True

    def __init__(self, p_tail, scale):
        if not p_tail > 0.0:
            raise InvalidInputError("p_tail must be positive")
        if not scale > 0.0:
            raise InvalidInputError("scale must be positive")
        self.p_tail = float(p_tail)
        self.s = float(scale)
        self._t0 = self.s * _LN2 ** (1.0 / self.p_tail)
        self._rule = None  # cached (t_cap, nodes, log_weights)
        self._sh = None

    @property
    def mean(self):
        return 0.0

    @property
    def essential_sup(self):
        return INF

    @property
    def mgf_domain_edge(self):
        return 1.0 / self.s if self.p_tail == 1.0 else INF

    @property
    def cgf_growth_order(self):
        if self.p_tail <= 1.0:
            return INF  # finite mgf domain; the edge rule decides
        return self.p_tail / (self.p_tail - 1.0)

    @property
    def tail_decay_order(self):
        return self.p_tail

    @property
    def scale_hint(self):
        if self._sh is None:
            self._sh = _exp_or_inf(0.5 * self.log_abs_moment(2.0))
        return self._sh

    def tail(self, t):
        return min(1.0, 2.0 * math.exp(-((t / self.s) ** self.p_tail)))

    def log_abs_moment(self, alpha):
        a = alpha / self.p_tail + 1.0
        return (
            _LN2
            + alpha * math.log(self.s)
            + numerics.log_gamma(a)
            + math.log(float(sps.gammaincc(a, _LN2)))
        )

    def _half_log_pdf(self, u):
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            v = (
                _LN2
                + math.log(self.p_tail / self.s)
                + (self.p_tail - 1.0) * np.log(u / self.s)
                - (u / self.s) ** self.p_tail
            )
        return np.where(u >= self._t0, v, -INF)

    def _mgf_log_integrand(self, t):
        def log_f(us):
            return np.asarray(_ln_cosh(t * us)) + self._half_log_pdf(us)

        return log_f

    def _ln_mgf_adaptive(self, t):
        log_f = self._mgf_log_integrand(t)
        hi = numerics.find_truncation(log_f, 2.0 * self._t0 + self.s)
        logv, _ = numerics.log_adaptive_quad(log_f, self._t0, hi)
        return logv

    def _cosh_rule(self, t_max):
        """Composite 15-point panels covering the mass of cosh(t u) half-pdf
        for every |t| <= t_max; cached, returns (nodes, log(w * half_pdf))."""
        if self._rule is not None and self._rule[0] >= t_max:
            return self._rule[1], self._rule[2]
        t_cap = 2.0 * t_max
        log_f = self._mgf_log_integrand(t_cap)
        hi = numerics.find_truncation(log_f, 2.0 * self._t0 + self.s)
        edges = np.geomspace(self._t0, hi, 81)
        mids = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1:] - edges[:-1])
        nodes = (mids[:, None] + half[:, None] * numerics._KRONROD_X).ravel()
        ws = (half[:, None] * numerics._KRONROD_W).ravel()
        with np.errstate(divide="ignore"):
            logw = np.log(ws) + self._half_log_pdf(nodes)
        self._rule = (t_cap, nodes, logw)
        return nodes, logw

    def ln_mgf(self, t):
        if abs(t) >= self.mgf_domain_edge:
            return INF
        if self.p_tail > 1.0 and self._rule is not None and abs(t) <= self._rule[0]:
            nodes, logw = self._rule[1], self._rule[2]
            return float(_kernels.log_sum_exp(
                np.asarray(_ln_cosh(t * nodes)) + logw, np.ones(nodes.size)
            ))
        return self._ln_mgf_adaptive(t)

    def ln_mgf_grid(self, ts):
        ts = np.asarray(ts, dtype=float)
        if ts.size == 0:
            return np.empty(0)
        if self.p_tail == 1.0:
            return np.array([self._ln_mgf_adaptive(float(t)) if abs(t) < self.mgf_domain_edge else INF for t in ts])
        nodes, logw = self._cosh_rule(float(np.max(np.abs(ts))))
        out = np.empty(ts.size)
        block = max(1, int(2_000_000 // nodes.size))
        for i in range(0, ts.size, block):
            a = _ln_cosh(ts[i : i + block, None] * nodes[None, :]) + logw[None, :]
            m = np.max(a, axis=1)
            out[i : i + block] = m + np.log(np.sum(np.exp(a - m[:, None]), axis=1))
        return out

    def mgf(self, t):
        lv = self.ln_mgf(t)
        v = _exp_or_inf(lv)
        return ExpectationResult(v, "quadrature", 1e-10 * v if v < INF else 0.0)

    def exp_pow_moment(self, p, k):
        if p > self.p_tail:
            return _closed(INF)
        if p == self.p_tail:
            r = (self.s / k) ** self.p_tail
            if r >= 1.0:
                return _closed(INF)
            return _closed(2.0 ** r / (1.0 - r))

        def log_f(us):
            return (us / k) ** p + self._half_log_pdf(us)

        hi = numerics.find_truncation(log_f, 2.0 * self._t0 + self.s + k)
        logv, err = numerics.log_adaptive_quad(log_f, self._t0, hi)
        v = _exp_or_inf(logv)
        return ExpectationResult(v, "quadrature", err * v if v < INF else 0.0)

    def scaled(self, c):
        return WeibullSym(self.p_tail, self.s * c)

    def describe(self):
        return f"weibull(p_tail={self.p_tail:g}, scale={self.s:g})"


class BoundedScaled(_DiscreteModel):
    """Arbitrary finite support with probabilities."""

    family = "bounded"

    def __init__(self, values, probs):
        super().__init__(values, probs)

    @property
    def is_symmetric(self):
        x, w = self._x, self._w
        rev = np.argsort(-x)
        return bool(
            np.allclose(x, -x[rev], atol=1e-15) and np.allclose(w, w[rev])
        )

    def center(self):
        m = self.mean
        if m == 0.0:
            return self
        return BoundedScaled(self._x - m, self._w)

    def scaled(self, c):
        return BoundedScaled(self._x * c, self._w)

    def describe(self):
        pts = ",".join(f"{x:g}@{w:g}" for x, w in zip(self._x, self._w))
        return f"bounded({pts})"


class Empirical(_DiscreteModel):
    """The empirical measure of a finite sample (equal weights, exact sums)."""

    family = "empirical"

    def __init__(self, samples):
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 1 or samples.size == 0:
            raise InvalidInputError("samples must be a nonempty 1-d list")
        if not np.all(np.isfinite(samples)):
            raise InvalidInputError("samples must be finite")
        self._samples = samples.copy()
        n = samples.size
        super().__init__(samples, np.full(n, 1.0 / n))

    @property
    def samples(self):
        return self._samples.copy()

    @property
    def mean(self):
        # exact average over the sample list
        return float(np.mean(self._samples))

    def center(self):
        m = self.mean
        if m == 0.0:
            return self
        return Empirical(self._samples - m)

    def scaled(self, c):
        return Empirical(self._samples * c)

    def describe(self):
        return f"empirical(n={self._samples.size})"


def rademacher_sum(n):
    """Exact law of a sum of n independent Rademacher signs."""
    if n < 1:
        raise InvalidInputError("need n >= 1")
    ks = np.arange(n + 1)
    values = 2.0 * ks - n
    probs = np.array([math.comb(n, int(k)) for k in ks], dtype=float) / 2.0 ** n
    return BoundedScaled(values, probs)


# ---------------------------------------------------------------------------
# module-level operation wrappers


def tail(model, t):
    """P(|X| >= t) for t >= 0."""
    if t < 0.0:
        raise InvalidInputError("tail requires t >= 0")
    return model.tail(float(t))


def abs_moment(model, alpha):
    """E|X|^alpha for alpha >= 1 (+inf when divergent)."""
    return model.abs_moment(float(alpha)).value


def mgf(model, t):
    """E exp(tX); +inf outside the mgf domain."""
    return model.mgf(float(t)).value


def exp_pow_moment(model, p, k):
    """E exp(|X/K|^p) for finite p >= 1 and K > 0 (+inf when divergent)."""
    p = float(getattr(p, "p", p))
    if not k > 0.0:
        raise InvalidInputError("K must be positive")
    if not (1.0 <= p < INF):
        raise InvalidInputError("p must be finite and >= 1")
    return model.exp_pow_moment(p, float(k)).value


def center(model):
    """The model shifted by -mean; symmetric families pass through."""
    return model.center()


# ---------------------------------------------------------------------------
# parsing and sample files


def load_samples(path):
    """Read one float per line; blank lines and '#' comments are ignored."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise InvalidInputError(
                    f"{path}:{lineno}: not a decimal float: {text!r}"
                ) from None
    if not values:
        raise InvalidInputError(f"{path}: no samples found")
    return Empirical(values)


def _parse_floats(text, n, what):
    parts = text.split(",") if text else []
    if len(parts) != n:
        raise InvalidInputError(f"{what}: expected {n} parameter(s), got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise InvalidInputError(f"{what}: parameters must be numbers: {text!r}") from None


def parse_model(spec):
    """Parse a model mini-spec: family:param[,param...].

    Families: pointmass:c, rademacher[:scale], uniform:a, gaussian:sigma,
    laplace:b, weibull:p_tail,scale, bounded:x@w[,x@w...], radsum:n,
    empirical:path.
    """
    spec = spec.strip()
    name, _, rest = spec.partition(":")
    name = name.lower()
    if name == "pointmass":
        (c,) = _parse_floats(rest, 1, name)
        return PointMass(c)
    if name == "rademacher":
        if not rest:
            return Rademacher()
        (s,) = _parse_floats(rest, 1, name)
        return Rademacher(s)
    if name == "uniform":
        (a,) = _parse_floats(rest, 1, name)
        return UniformSym(a)
    if name == "gaussian":
        (s,) = _parse_floats(rest, 1, name)
        return Gaussian(s)
    if name == "laplace":
        (b,) = _parse_floats(rest, 1, name)
        return Laplace(b)
    if name == "weibull":
        pt, sc = _parse_floats(rest, 2, name)
        return WeibullSym(pt, sc)
    if name == "bounded":
        values, probs = [], []
        for item in rest.split(","):
            left, sep, right = item.partition("@")
            if not sep:
                raise InvalidInputError(f"bounded: expected x@w, got {item!r}")
            try:
                values.append(float(left))
                probs.append(float(right))
            except ValueError:
                raise InvalidInputError(f"bounded: bad atom {item!r}") from None
        return BoundedScaled(values, probs)
    if name == "radsum":
        (n,) = _parse_floats(rest, 1, name)
        if n != int(n):
            raise InvalidInputError("radsum: n must be an integer")
        return rademacher_sum(int(n))
    if name == "empirical":
        if not rest:
            raise InvalidInputError("empirical: missing path")
        return load_samples(rest)
    raise InvalidInputError(f"unknown model family: {name!r}")
