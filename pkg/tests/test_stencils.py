"""Oracle tests for the interface-flux coefficient tables.

The oracle rebuilds each stencil's reconstruction polynomial from scratch
with exact rational arithmetic (sympy-free, Fraction-based) and compares
coefficients exactly against the hard-coded tables.
"""

from fractions import Fraction

import numpy as np
import pytest

from enoao import stencils
from enoao.stencils import ALL_STENCILS, FLUX_COEFFS, stencil_flux


def _solve_exact(A, b):
    """Gaussian elimination over Fractions (independent of the package)."""
    n = len(b)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = Fraction(1, 1) / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def oracle_interface_coeffs(m, n):
    """Coefficients c_k with fhat_{j+1/2} = sum c_k f_{j+k}, k=-m..n.

    Derived from scratch: the degree-(m+n) polynomial whose cell averages
    over [x_{j+k-1/2}, x_{j+k+1/2}] match f_{j+k}, evaluated at x_{j+1/2}.
    With unit dx and x centered on cell j, the average of x^p over cell k
    is ((k+1/2)^{p+1} - (k-1/2)^{p+1})/(p+1).
    """
    offsets = list(range(-m, n + 1))
    d = len(offsets)
    coeffs = []
    for basis in range(d):
        rhs = [Fraction(1 if i == basis else 0) for i in range(d)]
        A = [
            [
                (Fraction(2 * k + 1, 2) ** (p + 1) - Fraction(2 * k - 1, 2) ** (p + 1))
                / (p + 1)
                for p in range(d)
            ]
            for k in offsets
        ]
        a = _solve_exact(A, rhs)
        # polynomial value at x = 1/2
        coeffs.append(sum(a[p] * Fraction(1, 2) ** p for p in range(d)))
    return coeffs


@pytest.mark.parametrize("s", ALL_STENCILS)
def test_flux_coeffs_match_exact_solve(s):
    nums, den = FLUX_COEFFS[s]
    exact = oracle_interface_coeffs(*s)
    assert len(nums) == len(exact)
    for num, frac in zip(nums, exact):
        assert Fraction(num, den) == frac


@pytest.mark.parametrize("s", ALL_STENCILS)
def test_flux_exact_on_polynomials(s):
    """Degree-(m+n) cell-average data must be reconstructed exactly."""
    m, n = s
    rng = np.random.default_rng(42 + 10 * m + n)
    poly = rng.normal(size=m + n + 1)
    cells = np.arange(-4.0, 5.0)
    # cell averages of the polynomial: integrate term by term
    avgs = np.zeros(9)
    for p, c in enumerate(poly):
        avgs += c * ((cells + 0.5) ** (p + 1) - (cells - 0.5) ** (p + 1)) / (p + 1)
    expect = sum(c * 0.5 ** p for p, c in enumerate(poly))
    assert stencil_flux(avgs, s) == pytest.approx(expect, rel=1e-12, abs=1e-12)


def test_constant_window_all_stencils():
    w = np.full(9, 3.7)
    for s in ALL_STENCILS:
        assert stencil_flux(w, s) == pytest.approx(3.7, rel=1e-15)


def test_smoothness_pair_on_ramp():
    """Linear data: every candidate with m+n >= 1 has zero discrepancy;
    the (0,0) candidate sees the slope."""
    w = 2.0 * np.arange(9.0) + 1.0
    for s in stencils.CANDIDATES_7:
        pair = stencils.smoothness_pair(w, s)
        if s == (0, 0):
            assert pair.indicator == pytest.approx(2.0)
        else:
            assert pair.indicator == pytest.approx(0.0, abs=1e-12)


def test_smoothness_pair_min_structure():
    rng = np.random.default_rng(7)
    for _ in range(50):
        w = rng.normal(size=9)
        for s in stencils.CANDIDATES_7:
            pair = stencils.smoothness_pair(w, s)
            assert pair.indicator == min(pair.delta_l, pair.delta_r)
            assert pair.indicator >= 0.0


def test_mirror_window_involution():
    rng = np.random.default_rng(3)
    w = rng.normal(size=9)
    assert np.array_equal(stencils.mirror_window(stencils.mirror_window(w)), w)


def test_window_validation():
    with pytest.raises(ValueError):
        stencil_flux(np.zeros(7), (3, 3))
