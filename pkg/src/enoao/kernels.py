"""Compiled point-reconstruction kernels.

All kernels take a 9-entry window w of split-flux point values with the
target cell at index 4 and return the interface flux at x_{j+1/2}. The
adaptive-order kernels follow the reference scan order exactly: largest
candidate first, central before upwind-biased at equal size, fall-back to
the minimum indicator with ties resolved toward the later (larger)
candidate.

Scheme codes for the dispatcher:
    0 UW5   1 UW7   2 WENO-Z5   3 WENO-Z7   4 ENO-AO5   5 ENO-AO7   6 UW1
    100 + 4*m + n : fixed linear stencil (m, n) (spectral analysis only)
"""

import numpy as np
from numba import njit

from .rational import WENO5_BETA, WENO5_D, WENO7_BETA, WENO7_D
from .stencils import ALL_STENCILS, flux_coeffs_float

UW5, UW7, WENOZ5, WENOZ7, ENOAO5, ENOAO7, UW1 = range(7)
LINEAR_BASE = 100

SCHEME_CODES = {
    "UW5": UW5,
    "UW7": UW7,
    "WENO-Z5": WENOZ5,
    "WENO-Z7": WENOZ7,
    "ENO-AO5": ENOAO5,
    "ENO-AO7": ENOAO7,
}

SCHEME_ORDER = {"UW5": 5, "UW7": 7, "WENO-Z5": 5, "WENO-Z7": 7,
                "ENO-AO5": 5, "ENO-AO7": 7}

# Padded linear-stencil table: row 4*m+n holds the coefficients aligned to
# window index 4-m.
_LIN = np.zeros((16, 7), dtype=np.float64)
_LIN_START = np.zeros(16, dtype=np.int64)
_LIN_LEN = np.zeros(16, dtype=np.int64)
for _s in ALL_STENCILS:
    _m, _n = _s
    _c = flux_coeffs_float(_s)
    _LIN[4 * _m + _n, : _c.size] = _c
    _LIN_START[4 * _m + _n] = 4 - _m
    _LIN_LEN[4 * _m + _n] = _c.size


def stencil_code(m, n):
    return LINEAR_BASE + 4 * m + n


@njit(cache=True)
def linear_flux(w, idx):
    s = _LIN_START[idx]
    acc = 0.0
    for t in range(_LIN_LEN[idx]):
        acc += _LIN[idx, t] * w[s + t]
    return acc


@njit(cache=True)
def eno_ao7(w, delta):
    df = np.empty(9)

    dfl = abs(-w[0] + 7 * w[1] - 21 * w[2] + 35 * w[3] - 35 * w[4] + 21 * w[5] - 7 * w[6] + w[7])
    dfr = abs(-w[1] + 7 * w[2] - 21 * w[3] + 35 * w[4] - 35 * w[5] + 21 * w[6] - 7 * w[7] + w[8])
    df[8] = min(dfl, dfr)
    if df[8] <= delta:
        return (-3 * w[1] + 25 * w[2] - 101 * w[3] + 319 * w[4] + 214 * w[5] - 38 * w[6] + 4 * w[7]) / 420

    dfl = abs(w[1] - 6 * w[2] + 15 * w[3] - 20 * w[4] + 15 * w[5] - 6 * w[6] + w[7])
    dfr = abs(w[2] - 6 * w[3] + 15 * w[4] - 20 * w[5] + 15 * w[6] - 6 * w[7] + w[8])
    df[7] = min(dfl, dfr)
    if df[7] <= delta:
        return (w[2] - 8 * w[3] + 37 * w[4] + 37 * w[5] - 8 * w[6] + w[7]) / 60.0

    dfl = abs(w[0] - 6 * w[1] + 15 * w[2] - 20 * w[3] + 15 * w[4] - 6 * w[5] + w[6])
    dfr = abs(w[1] - 6 * w[2] + 15 * w[3] - 20 * w[4] + 15 * w[5] - 6 * w[6] + w[7])
    df[6] = min(dfl, dfr)
    if df[6] <= delta:
        return (-w[1] + 7 * w[2] - 23 * w[3] + 57 * w[4] + 22 * w[5] - 2 * w[6]) / 60.0

    dfl = abs(-w[1] + 5 * w[2] - 10 * w[3] + 10 * w[4] - 5 * w[5] + w[6])
    dfr = abs(-w[2] + 5 * w[3] - 10 * w[4] + 10 * w[5] - 5 * w[6] + w[7])
    df[5] = min(dfl, dfr)
    if df[5] <= delta:
        return (2 * w[2] - 13 * w[3] + 47 * w[4] + 27 * w[5] - 3 * w[6]) / 60.0

    dfl = abs(w[2] - 4 * w[3] + 6 * w[4] - 4 * w[5] + w[6])
    dfr = abs(w[3] - 4 * w[4] + 6 * w[5] - 4 * w[6] + w[7])
    df[4] = min(dfl, dfr)
    if df[4] <= delta:
        return (-w[3] + 7 * w[4] + 7 * w[5] - w[6]) / 12.0

    dfl = abs(w[1] - 4 * w[2] + 6 * w[3] - 4 * w[4] + w[5])
    dfr = abs(w[2] - 4 * w[3] + 6 * w[4] - 4 * w[5] + w[6])
    df[3] = min(dfl, dfr)
    if df[3] <= delta:
        return (w[2] - 5 * w[3] + 13 * w[4] + 3 * w[5]) / 12.0

    dfl = abs(-w[2] + 3 * w[3] - 3 * w[4] + w[5])
    dfr = abs(-w[3] + 3 * w[4] - 3 * w[5] + w[6])
    df[2] = min(dfl, dfr)
    if df[2] <= delta:
        return (-w[3] + 5 * w[4] + 2 * w[5]) / 6.0

    dfl = abs(w[3] - 2 * w[4] + w[5])
    dfr = abs(w[4] - 2 * w[5] + w[6])
    df[1] = min(dfl, dfr)
    if df[1] <= delta:
        return 0.5 * (w[4] + w[5])

    dfl = (abs(w[3] - w[4]) + abs(w[2] - w[3])) / 2
    dfr = (abs(w[5] - w[4]) + abs(w[6] - w[5])) / 2
    df[0] = min(dfl, dfr)
    if df[0] <= delta:
        return w[4]

    mindf = df[0]
    index = 0
    for k in range(1, 9):
        if df[k] <= mindf:
            mindf = df[k]
            index = k

    if index == 0:
        return w[4]
    elif index == 1:
        return 0.5 * (w[4] + w[5])
    elif index == 2:
        return (-w[3] + 5 * w[4] + 2 * w[5]) / 6.0
    elif index == 3:
        return (w[2] - 5 * w[3] + 13 * w[4] + 3 * w[5]) / 12.0
    elif index == 4:
        return (-w[3] + 7 * w[4] + 7 * w[5] - w[6]) / 12.0
    elif index == 5:
        return (2 * w[2] - 13 * w[3] + 47 * w[4] + 27 * w[5] - 3 * w[6]) / 60.0
    elif index == 6:
        return (-w[1] + 7 * w[2] - 23 * w[3] + 57 * w[4] + 22 * w[5] - 2 * w[6]) / 60.0
    elif index == 7:
        return (w[2] - 8 * w[3] + 37 * w[4] + 37 * w[5] - 8 * w[6] + w[7]) / 60.0
    else:
        return (-3 * w[1] + 25 * w[2] - 101 * w[3] + 319 * w[4] + 214 * w[5] - 38 * w[6] + 4 * w[7]) / 420


@njit(cache=True)
def eno_ao5(w, delta):
    df = np.empty(6)

    dfl = abs(-w[1] + 5 * w[2] - 10 * w[3] + 10 * w[4] - 5 * w[5] + w[6])
    dfr = abs(-w[2] + 5 * w[3] - 10 * w[4] + 10 * w[5] - 5 * w[6] + w[7])
    df[5] = min(dfl, dfr)
    if df[5] <= delta:
        return (2 * w[2] - 13 * w[3] + 47 * w[4] + 27 * w[5] - 3 * w[6]) / 60.0

    dfl = abs(w[2] - 4 * w[3] + 6 * w[4] - 4 * w[5] + w[6])
    dfr = abs(w[3] - 4 * w[4] + 6 * w[5] - 4 * w[6] + w[7])
    df[4] = min(dfl, dfr)
    if df[4] <= delta:
        return (-w[3] + 7 * w[4] + 7 * w[5] - w[6]) / 12.0

    dfl = abs(w[1] - 4 * w[2] + 6 * w[3] - 4 * w[4] + w[5])
    dfr = abs(w[2] - 4 * w[3] + 6 * w[4] - 4 * w[5] + w[6])
    df[3] = min(dfl, dfr)
    if df[3] <= delta:
        return (w[2] - 5 * w[3] + 13 * w[4] + 3 * w[5]) / 12.0

    dfl = abs(-w[2] + 3 * w[3] - 3 * w[4] + w[5])
    dfr = abs(-w[3] + 3 * w[4] - 3 * w[5] + w[6])
    df[2] = min(dfl, dfr)
    if df[2] <= delta:
        return (-w[3] + 5 * w[4] + 2 * w[5]) / 6.0

    dfl = abs(w[3] - 2 * w[4] + w[5])
    dfr = abs(w[4] - 2 * w[5] + w[6])
    df[1] = min(dfl, dfr)
    if df[1] <= delta:
        return 0.5 * (w[4] + w[5])

    dfl = (abs(w[3] - w[4]) + abs(w[2] - w[3])) / 2
    dfr = (abs(w[5] - w[4]) + abs(w[6] - w[5])) / 2
    df[0] = min(dfl, dfr)
    if df[0] <= delta:
        return w[4]

    mindf = df[0]
    index = 0
    for k in range(1, 6):
        if df[k] <= mindf:
            mindf = df[k]
            index = k

    if index == 0:
        return w[4]
    elif index == 1:
        return 0.5 * (w[4] + w[5])
    elif index == 2:
        return (-w[3] + 5 * w[4] + 2 * w[5]) / 6.0
    elif index == 3:
        return (w[2] - 5 * w[3] + 13 * w[4] + 3 * w[5]) / 12.0
    elif index == 4:
        return (-w[3] + 7 * w[4] + 7 * w[5] - w[6]) / 12.0
    else:
        return (2 * w[2] - 13 * w[3] + 47 * w[4] + 27 * w[5] - 3 * w[6]) / 60.0


@njit(cache=True)
def _beta_form(vals, mat):
    n = vals.shape[0]
    acc = 0.0
    for i in range(n):
        row = 0.0
        for j in range(n):
            row += mat[i, j] * vals[j]
        acc += vals[i] * row
    return acc


@njit(cache=True)
def weno_z5(w, eps, p):
    b = np.empty(3)
    for k in range(3):
        b[k] = _beta_form(w[2 + k : 5 + k], WENO5_BETA[k])
    tau = abs(b[0] - b[2])

    q0 = (2 * w[2] - 7 * w[3] + 11 * w[4]) / 6.0
    q1 = (-w[3] + 5 * w[4] + 2 * w[5]) / 6.0
    q2 = (2 * w[4] + 5 * w[5] - w[6]) / 6.0

    a0 = WENO5_D[0] * (1.0 + (tau / (b[0] + eps)) ** p)
    a1 = WENO5_D[1] * (1.0 + (tau / (b[1] + eps)) ** p)
    a2 = WENO5_D[2] * (1.0 + (tau / (b[2] + eps)) ** p)
    s = a0 + a1 + a2
    return (a0 * q0 + a1 * q1 + a2 * q2) / s


@njit(cache=True)
def weno_z7(w, eps, p):
    b = np.empty(4)
    for k in range(4):
        b[k] = _beta_form(w[1 + k : 5 + k], WENO7_BETA[k])
    tau = abs(b[0] + 3 * b[1] - 3 * b[2] - b[3])

    q0 = (-3 * w[1] + 13 * w[2] - 23 * w[3] + 25 * w[4]) / 12.0
    q1 = (w[2] - 5 * w[3] + 13 * w[4] + 3 * w[5]) / 12.0
    q2 = (-w[3] + 7 * w[4] + 7 * w[5] - w[6]) / 12.0
    q3 = (3 * w[4] + 13 * w[5] - 5 * w[6] + w[7]) / 12.0

    s = 0.0
    acc = 0.0
    a0 = WENO7_D[0] * (1.0 + (tau / (b[0] + eps)) ** p)
    a1 = WENO7_D[1] * (1.0 + (tau / (b[1] + eps)) ** p)
    a2 = WENO7_D[2] * (1.0 + (tau / (b[2] + eps)) ** p)
    a3 = WENO7_D[3] * (1.0 + (tau / (b[3] + eps)) ** p)
    s = a0 + a1 + a2 + a3
    acc = a0 * q0 + a1 * q1 + a2 * q2 + a3 * q3
    return acc / s


@njit(cache=True)
def weno_z_weights(w, order, eps, p):
    """Normalized weights, exposed for the convexity checks."""
    if order == 5:
        b = np.empty(3)
        for k in range(3):
            b[k] = _beta_form(w[2 + k : 5 + k], WENO5_BETA[k])
        tau = abs(b[0] - b[2])
        a = np.empty(3)
        for k in range(3):
            a[k] = WENO5_D[k] * (1.0 + (tau / (b[k] + eps)) ** p)
        return a / a.sum()
    b = np.empty(4)
    for k in range(4):
        b[k] = _beta_form(w[1 + k : 5 + k], WENO7_BETA[k])
    tau = abs(b[0] + 3 * b[1] - 3 * b[2] - b[3])
    a = np.empty(4)
    for k in range(4):
        a[k] = WENO7_D[k] * (1.0 + (tau / (b[k] + eps)) ** p)
    return a / a.sum()


@njit(cache=True)
def uw5(w):
    return (2 * w[2] - 13 * w[3] + 47 * w[4] + 27 * w[5] - 3 * w[6]) / 60.0


@njit(cache=True)
def uw7(w):
    return (-3 * w[1] + 25 * w[2] - 101 * w[3] + 319 * w[4] + 214 * w[5] - 38 * w[6] + 4 * w[7]) / 420


@njit(cache=True)
def recon(w, scheme, delta, eps, p):
    if scheme == ENOAO5:
        return eno_ao5(w, delta)
    elif scheme == ENOAO7:
        return eno_ao7(w, delta)
    elif scheme == WENOZ5:
        return weno_z5(w, eps, p)
    elif scheme == WENOZ7:
        return weno_z7(w, eps, p)
    elif scheme == UW5:
        return uw5(w)
    elif scheme == UW7:
        return uw7(w)
    elif scheme == UW1:
        return w[4]
    else:
        return linear_flux(w, scheme - LINEAR_BASE)
