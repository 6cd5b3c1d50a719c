"""Candidate stencils, interface-flux coefficients and min-discrepancy indicators.

A stencil (m, n) spans cells j-m .. j+n; the reconstruction target is the
interface value at x_{j+1/2}. Windows are 9 consecutive point values of a
split flux, index 4 being the target cell j.
"""

from fractions import Fraction
from typing import NamedTuple

import numpy as np

F = Fraction

# Interface-flux coefficients over f_{j-m} .. f_{j+n} for all 16 stencils,
# written as (numerators, denominator).
FLUX_COEFFS = {
    (0, 0): ((1,), 1),
    (0, 1): ((1, 1), 2),
    (0, 2): ((2, 5, -1), 6),
    (0, 3): ((3, 13, -5, 1), 12),
    (1, 0): ((-1, 3), 2),
    (1, 1): ((-1, 5, 2), 6),
    (1, 2): ((-1, 7, 7, -1), 12),
    (1, 3): ((-3, 27, 47, -13, 2), 60),
    (2, 0): ((2, -7, 11), 6),
    (2, 1): ((1, -5, 13, 3), 12),
    (2, 2): ((2, -13, 47, 27, -3), 60),
    (2, 3): ((1, -8, 37, 37, -8, 1), 60),
    (3, 0): ((-3, 13, -23, 25), 12),
    (3, 1): ((-3, 17, -43, 77, 12), 60),
    (3, 2): ((-1, 7, -23, 57, 22, -2), 60),
    (3, 3): ((-3, 25, -101, 319, 214, -38, 4), 420),
}

ALL_STENCILS = tuple(sorted(FLUX_COEFFS))

# Linearly stable candidates (minus the large-dispersion (1,0) stencil),
# ordered smallest to largest; the priority scan runs back to front. Ties in
# the minimum fall-back resolve toward the later entry.
CANDIDATES_5 = ((0, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2))
CANDIDATES_7 = CANDIDATES_5 + ((3, 2), (2, 3), (3, 3))

# delta_L finite differences: (first cell offset, coefficients). delta_R rows
# are the same coefficients shifted one cell right. (0,0) is special-cased.
_DELTA_L = {
    (0, 1): (-1, (1, -2, 1)),
    (1, 1): (-2, (-1, 3, -3, 1)),
    (2, 1): (-3, (1, -4, 6, -4, 1)),
    (1, 2): (-2, (1, -4, 6, -4, 1)),
    (2, 2): (-3, (-1, 5, -10, 10, -5, 1)),
    (3, 2): (-4, (1, -6, 15, -20, 15, -6, 1)),
    (2, 3): (-3, (1, -6, 15, -20, 15, -6, 1)),
    (3, 3): (-4, (-1, 7, -21, 35, -35, 21, -7, 1)),
}

ORDER5 = "order5"
ORDER7 = "order7"


class SmoothnessPair(NamedTuple):
    delta_l: float
    delta_r: float
    indicator: float


def _check_window(window):
    w = np.asarray(window, dtype=np.float64)
    if w.shape != (9,):
        raise ValueError(f"window must have exactly 9 entries, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise ValueError("window contains non-finite values")
    return w


def flux_coeffs_float(s):
    nums, den = FLUX_COEFFS[s]
    return np.array([n / den for n in nums], dtype=np.float64)


def flux_coeffs_exact(s):
    nums, den = FLUX_COEFFS[s]
    return [F(n, den) for n in nums]


def stencil_flux(window, s) -> float:
    """Interface flux at x_{j+1/2} from the (m, n) stencil's linear formula."""
    if s not in FLUX_COEFFS:
        raise ValueError(f"invalid stencil {s}")
    w = _check_window(window)
    m, _ = s
    c = flux_coeffs_float(s)
    return float(np.dot(c, w[4 - m : 4 - m + len(c)]))


def smoothness_pair(window, s) -> SmoothnessPair:
    """Min-discrepancy indicator (delta_L, delta_R, min) for a candidate stencil."""
    w = _check_window(window)
    if s == (0, 0):
        dl = (abs(w[4] - w[3]) + abs(w[3] - w[2])) / 2
        dr = (abs(w[4] - w[5]) + abs(w[5] - w[6])) / 2
    elif s in _DELTA_L:
        off, c = _DELTA_L[s]
        dl = abs(sum(ci * w[4 + off + i] for i, ci in enumerate(c)))
        dr = abs(sum(ci * w[5 + off + i] for i, ci in enumerate(c)))
    else:
        raise ValueError(f"stencil {s} is not a scored candidate")
    return SmoothnessPair(float(dl), float(dr), float(min(dl, dr)))


def mirror_window(window):
    """Reverse a window about the interface; maps minus-flux reconstruction
    onto the plus-flux formulas."""
    w = _check_window(window)
    return w[::-1].copy()


def candidates(order):
    if order == ORDER5:
        return CANDIDATES_5
    if order == ORDER7:
        return CANDIDATES_7
    raise ValueError(f"unknown order {order!r}")
