"""Python-facing reconstruction API over the compiled kernels."""

import numpy as np

from . import kernels
from .rational import WENO5_BETA, WENO7_BETA
from .stencils import (
    CANDIDATES_5,
    CANDIDATES_7,
    ORDER5,
    ORDER7,
    _check_window,
    smoothness_pair,
    stencil_flux,
)

WENO5_SUBS = ((2, 0), (1, 1), (0, 2))
WENO7_SUBS = ((3, 0), (2, 1), (1, 2), (0, 3))


def eno_ao_reconstruct(window, order, delta=1e-5) -> float:
    """Adaptive-order interface flux: highest-priority candidate whose
    indicator is <= delta, else the candidate with the smallest indicator."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    w = _check_window(window)
    if order == ORDER7:
        return float(kernels.eno_ao7(w, delta))
    if order == ORDER5:
        return float(kernels.eno_ao5(w, delta))
    raise ValueError(f"unknown order {order!r}")


def eno_ao_select(window, order, delta=1e-5):
    """The stencil eno_ao_reconstruct would use (selection introspection)."""
    w = _check_window(window)
    cands = CANDIDATES_7 if order == ORDER7 else CANDIDATES_5
    scores = [smoothness_pair(w, s).indicator for s in cands]
    for k in range(len(cands) - 1, -1, -1):
        if scores[k] <= delta:
            return cands[k]
    best = 0
    for k in range(1, len(cands)):
        if scores[k] <= scores[best]:
            best = k
    return cands[best]


def weno_z_reconstruct(window, order, eps=1e-40, p=1.0) -> float:
    if eps <= 0:
        raise ValueError("eps must be positive")
    w = _check_window(window)
    if order == ORDER5:
        return float(kernels.weno_z5(w, eps, p))
    if order == ORDER7:
        return float(kernels.weno_z7(w, eps, p))
    raise ValueError(f"unknown order {order!r}")


def weno_z_weights(window, order, eps=1e-40, p=1.0):
    w = _check_window(window)
    return np.asarray(kernels.weno_z_weights(w, 5 if order == ORDER5 else 7, eps, p))


def jiang_shu_beta(window, s) -> float:
    """Derivative-energy smoothness measure of a weighted-blend sub-stencil."""
    w = _check_window(window)
    m, n = s
    if s in WENO5_SUBS:
        mat = WENO5_BETA[n]
    elif s in WENO7_SUBS:
        mat = WENO7_BETA[n]
    else:
        raise ValueError(f"{s} is not a blend sub-stencil")
    vals = w[4 - m : 5 + n]
    return float(vals @ mat @ vals)


def linear_reconstruct(window, order) -> float:
    """Full-stencil linear upwind baseline (UW5 / UW7)."""
    if order == ORDER5:
        return stencil_flux(window, (2, 2))
    if order == ORDER7:
        return stencil_flux(window, (3, 3))
    raise ValueError(f"unknown order {order!r}")
