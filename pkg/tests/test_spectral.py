"""Spectral oracle: analytic modified wavenumbers vs the measured ADR."""

import math

import numpy as np
import pytest

from enoao import spectral
from enoao.stencils import ALL_STENCILS

KAPPAS = (math.pi / 8, math.pi / 4, math.pi / 2, 3 * math.pi / 4)


def test_kappa_zero_is_exact():
    for s in ALL_STENCILS:
        smp = spectral.analytic_modified_wavenumber(s, 0.0)
        assert smp.kappa_prime_re == pytest.approx(0.0, abs=1e-14)
        assert smp.kappa_prime_im == pytest.approx(0.0, abs=1e-14)


def test_low_wavenumber_consistency():
    """kappa' ~ kappa as kappa -> 0 for every consistent stencil."""
    for s in ALL_STENCILS:
        smp = spectral.analytic_modified_wavenumber(s, 1e-3)
        assert smp.kappa_prime_re == pytest.approx(1e-3, rel=1e-4)
        assert abs(smp.kappa_prime_im) < 1e-6


def test_central_stencils_have_zero_dissipation():
    for s, kappa in [((1, 2), 0.9), ((0, 1), 2.2), ((2, 3), 1.3)]:
        # (m, n) with n = m+1 are central differences about the interface
        smp = spectral.analytic_modified_wavenumber(s, kappa)
        assert smp.kappa_prime_im == pytest.approx(0.0, abs=1e-13)


def test_upwind_full_stencils_dissipative():
    kappas = np.linspace(0.0, math.pi, 200)
    for s in [(2, 2), (3, 3), (0, 0), (1, 1)]:
        ims = [spectral.analytic_modified_wavenumber(s, k).kappa_prime_im for k in kappas]
        assert max(ims) <= 1e-12


def test_downwind_stencils_unstable():
    for s in [(0, 2), (0, 3), (1, 3)]:
        ims = [
            spectral.analytic_modified_wavenumber(s, k).kappa_prime_im
            for k in np.linspace(0.0, math.pi, 200)
        ]
        assert max(ims) > 1e-3


def test_stability_screen_candidate_lists():
    stable = spectral.linear_stability_screen()
    assert stable == {
        (0, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3),
    }


@pytest.mark.parametrize("s", [(2, 2), (3, 3), (1, 1), (2, 1), (1, 2), (3, 2)])
def test_adr_matches_analytic_linear(s):
    for kappa in KAPPAS:
        ana = spectral.analytic_modified_wavenumber(s, kappa)
        num = spectral.adr(s, kappa)
        assert abs(num.kappa_prime_re - ana.kappa_prime_re) < 1e-3
        assert abs(num.kappa_prime_im - ana.kappa_prime_im) < 1e-3


def test_adr_named_schemes_reduce_to_linear_on_smooth_modes():
    """UW5/UW7 baselines equal their full-stencil analytic rows."""
    for name, s in (("UW5", (2, 2)), ("UW7", (3, 3))):
        for kappa in KAPPAS:
            ana = spectral.analytic_modified_wavenumber(s, kappa)
            num = spectral.adr(name, kappa)
            assert abs(num.kappa_prime_re - ana.kappa_prime_re) < 1e-3
            assert abs(num.kappa_prime_im - ana.kappa_prime_im) < 1e-3


def test_adr_nonlinear_scheme_behavior():
    """Resolved modes: tiny dissipation error, accurate dispersion.
    Near-cutoff mode: genuinely dissipative."""
    for name in ("ENO-AO5", "ENO-AO7", "WENO-Z5", "WENO-Z7"):
        for kappa in KAPPAS[:2]:
            num = spectral.adr(name, kappa)
            assert abs(num.kappa_prime_im) <= 5e-3, (name, kappa)
            assert num.kappa_prime_re == pytest.approx(kappa, abs=5e-3)
        high = spectral.adr(name, 3 * math.pi / 4)
        assert high.kappa_prime_im < -0.1, name


def test_adr_rejects_off_grid_mode():
    with pytest.raises(ValueError):
        spectral.adr("UW5", 0.1234)


def test_kappa_domain_validation():
    with pytest.raises(ValueError):
        spectral.analytic_modified_wavenumber((2, 2), -0.1)
    with pytest.raises(ValueError):
        spectral.analytic_modified_wavenumber((2, 2), math.pi + 0.1)
