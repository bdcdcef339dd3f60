"""Kernel backend selection.

The hot inner loops (phi evaluation on grids, saturating exponential sums,
mgf-domination margins, log-gamma) exist twice: a compiled Cython module
``_fast`` and a pure-Python twin ``_ref``.  The compiled one is preferred
when importable; EXPORLICZ_BACKEND=python forces the fallback and
EXPORLICZ_BACKEND=compiled makes a missing extension a hard error.
"""

import os

_requested = os.environ.get("EXPORLICZ_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "compiled"):
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _ref as _impl

        BACKEND = "python"
elif _requested in ("python", "pure"):
    from . import _ref as _impl

    BACKEND = "python"
else:
    raise ImportError(f"unknown EXPORLICZ_BACKEND value: {_requested!r}")

EXP_CAP = _impl.EXP_CAP
phi_scalar = _impl.phi_scalar
phi_grid = _impl.phi_grid
weighted_exp_sum = _impl.weighted_exp_sum
log_sum_exp = _impl.log_sum_exp
tau_margin = _impl.tau_margin
lgamma = _impl.lgamma

__all__ = [
    "BACKEND",
    "EXP_CAP",
    "phi_scalar",
    "phi_grid",
    "weighted_exp_sum",
    "log_sum_exp",
    "tau_margin",
    "lgamma",
]
