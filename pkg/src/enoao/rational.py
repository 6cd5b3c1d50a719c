"""Exact-rational stencil algebra.

Everything here works in `fractions.Fraction` on the unit-spacing grid
(cell k = [k-1/2, k+1/2]) and is evaluated once at import time to freeze
the float tables used by the compiled kernels: interface-value
coefficients, ideal (optimal) weights for the weighted blends, and the
quadratic forms of the derivative-energy smoothness measure.
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

F = Fraction


def _solve(a, b):
    """Gaussian elimination over Fractions. a: n x n rows, b: length n."""
    n = len(b)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = F(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _cell_moment(k, t):
    """Integral of x^t over cell k = [k-1/2, k+1/2]."""
    a, b = F(2 * k - 1, 2), F(2 * k + 1, 2)
    return (b ** (t + 1) - a ** (t + 1)) / (t + 1)


def _inverse(a):
    n = len(a)
    cols = []
    for j in range(n):
        e = [F(1) if i == j else F(0) for i in range(n)]
        cols.append(_solve(a, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _vandermonde_inverse(offsets):
    """Inverse of the cell-average moment matrix for the given cell offsets.

    Row i of the forward matrix holds the moments of cell offsets[i], so
    (inverse @ f) gives the monomial coefficients of the polynomial whose
    average over each listed cell equals the corresponding data value.
    """
    d = len(offsets)
    a = [[_cell_moment(k, t) for t in range(d)] for k in offsets]
    return _inverse(a)


def point_value_coeffs(offsets, x):
    """Coefficients c with p(x) = sum c_i f_i for the cell-average polynomial."""
    inv = _vandermonde_inverse(tuple(offsets))
    d = len(offsets)
    xs = [F(x) ** t for t in range(d)]
    return [sum(xs[t] * inv[t][i] for t in range(d)) for i in range(d)]


def interface_coeffs(m, n):
    """Interface-value coefficients at x_{j+1/2} over f_{j-m} .. f_{j+n}."""
    return point_value_coeffs(range(-m, n + 1), F(1, 2))


def cell_average_coeffs(offsets, cell):
    """Coefficients of the polynomial's average over an (outside) cell."""
    inv = _vandermonde_inverse(tuple(offsets))
    d = len(offsets)
    mom = [_cell_moment(cell, t) for t in range(d)]
    return [sum(mom[t] * inv[t][i] for t in range(d)) for i in range(d)]


def derivative_energy_matrix(offsets):
    """Quadratic form M with beta = f . M . f.

    beta sums, over derivative orders l = 1 .. degree, the integral of the
    squared l-th derivative of the cell-average-matching polynomial over
    the centre cell [-1/2, 1/2] (unit spacing, so the usual dx powers drop
    out).
    """
    d = len(offsets)
    inv = _vandermonde_inverse(tuple(offsets))

    # G[t][s] accumulates sum_l (t!/(t-l)!)(s!/(s-l)!) int x^(t+s-2l)
    g = [[F(0)] * d for _ in range(d)]
    for l in range(1, d):
        for t in range(l, d):
            for s in range(l, d):
                ct = F(math.factorial(t), math.factorial(t - l))
                cs = F(math.factorial(s), math.factorial(s - l))
                g[t][s] += ct * cs * _cell_moment(0, t + s - 2 * l)

    m = [[F(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            m[i][j] = sum(
                inv[t][i] * g[t][s] * inv[s][j] for t in range(d) for s in range(d)
            )
    return m


def ideal_weights(r):
    """Weights combining the r upwind sub-stencil fluxes into the full one.

    Sub-stencil k of the (2r-1)-point parent S_{j-(r-1)}^{j+(r-1)} spans
    offsets j-(r-1)+k .. j+k. Solved exactly and verified against every
    coefficient of the parent interface formula.
    """
    parent = interface_coeffs(r - 1, r - 1)
    subs = []
    for k in range(r):
        c = interface_coeffs(r - 1 - k, k)
        padded = [F(0)] * (2 * r - 1)
        for i, v in enumerate(c):
            padded[k + i] = v
        subs.append(padded)
    # Pick r independent equations, then verify the remaining ones.
    a = [[subs[k][row] for k in range(r)] for row in range(r)]
    b = [parent[row] for row in range(r)]
    d = _solve(a, b)
    for row in range(2 * r - 1):
        assert sum(d[k] * subs[k][row] for k in range(r)) == parent[row]
    return d


def _floats(seq):
    return np.array([float(x) for x in seq], dtype=np.float64)


# Frozen tables for the compiled kernels -------------------------------------

# 5th order: sub-stencils (2,0), (1,1), (0,2) of S_{j-2}^{j+2}
WENO5_D = _floats(ideal_weights(3))
WENO5_BETA = np.array(
    [
        [[float(v) for v in row] for row in derivative_energy_matrix(tuple(range(k - 2, k + 1)))]
        for k in range(3)
    ],
    dtype=np.float64,
)

# 7th order: sub-stencils (3,0), (2,1), (1,2), (0,3) of S_{j-3}^{j+3}
WENO7_D = _floats(ideal_weights(4))
WENO7_BETA = np.array(
    [
        [[float(v) for v in row] for row in derivative_energy_matrix(tuple(range(k - 3, k + 1)))]
        for k in range(4)
    ],
    dtype=np.float64,
)
