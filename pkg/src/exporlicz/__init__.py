"""Exponential-type Orlicz norms of random variables.

Computes the Luxemburg norm inf{K : E exp(|X/K|^p) <= 2}, the equivalent
tail and moment constants, and the mgf-domination norm
inf{K : E exp(tX) <= exp(phi_q(Kt)) for all t} for centered variables,
together with the tail-bound curves these norms certify (including the
complementary Hoeffding bound that vanishes beyond t = 2a).
"""

from ._kernels import BACKEND
from .bounds import (
    BoundCurve,
    VerificationReport,
    exp_power_tail_curve,
    hoeffding_classic,
    hoeffding_complementary,
    hoeffding_sum_params,
    luxemburg_upper_const,
    tail_from_tau,
    tau_upper_const,
    verify_bound,
)
from .errors import (
    CenteringRequiredError,
    ConvergenceError,
    DomainError,
    EmptyDomainError,
    ExporliczError,
    InvalidExponentError,
    InvalidInputError,
    NoBracketError,
    UnsupportedKindError,
)
from .norms import NormEstimate, luxemburg_norm, moment_norm, tail_norm, tau_norm
from .numerics import BisectionSpec, log_gamma, log_sum_exp, monotone_bisect, sup_search
from .phi_core import (
    Exponent,
    PhiFunction,
    as_exponent,
    conjugate_exponent,
    legendre_numeric,
    phi,
    phi_function,
    psi,
    psi_function,
)
from .rv_models import (
    BoundedScaled,
    Empirical,
    ExpectationResult,
    Gaussian,
    Laplace,
    PointMass,
    Rademacher,
    RandomVariableModel,
    UniformSym,
    WeibullSym,
    abs_moment,
    center,
    exp_pow_moment,
    load_samples,
    mgf,
    parse_model,
    rademacher_sum,
    tail,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # phi family
    "Exponent",
    "PhiFunction",
    "as_exponent",
    "conjugate_exponent",
    "legendre_numeric",
    "phi",
    "phi_function",
    "psi",
    "psi_function",
    # models
    "BoundedScaled",
    "Empirical",
    "ExpectationResult",
    "Gaussian",
    "Laplace",
    "PointMass",
    "Rademacher",
    "RandomVariableModel",
    "UniformSym",
    "WeibullSym",
    "abs_moment",
    "center",
    "exp_pow_moment",
    "load_samples",
    "mgf",
    "parse_model",
    "rademacher_sum",
    "tail",
    # numerics
    "BisectionSpec",
    "log_gamma",
    "log_sum_exp",
    "monotone_bisect",
    "sup_search",
    # norms
    "NormEstimate",
    "luxemburg_norm",
    "moment_norm",
    "tail_norm",
    "tau_norm",
    # bounds
    "BoundCurve",
    "VerificationReport",
    "exp_power_tail_curve",
    "hoeffding_classic",
    "hoeffding_complementary",
    "hoeffding_sum_params",
    "luxemburg_upper_const",
    "tail_from_tau",
    "tau_upper_const",
    "verify_bound",
    # errors
    "CenteringRequiredError",
    "ConvergenceError",
    "DomainError",
    "EmptyDomainError",
    "ExporliczError",
    "InvalidExponentError",
    "InvalidInputError",
    "NoBracketError",
    "UnsupportedKindError",
]
