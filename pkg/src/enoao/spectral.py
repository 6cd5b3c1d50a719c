"""Spectral analysis: analytic modified wavenumbers and the numerical ADR.

The analytic evaluator implements the closed-form trigonometric rows for
all 16 linear stencil fluxes. The approximate dispersion relation (ADR)
measures the effective wavenumber of the full nonlinear semi-discretization
by advancing a monochromatic carrier (real and imaginary parts advected as
two independent real fields) through one tiny forward-Euler step and
reading off the amplitude and phase change of the probed mode.
"""

import cmath
import math
from typing import NamedTuple

import numpy as np

from . import kernels, scalar

# Row tables: Re = sum a_k sin(k*kappa); Im = c0 + sum c_k cos(k*kappa).
_RE = {
    (0, 0): (1.0,),
    (0, 1): (1.0,),
    (0, 2): (4 / 3, -1 / 6),
    (0, 3): (7 / 4, -1 / 2, 1 / 12),
    (1, 0): (2.0, -1 / 2),
    (1, 1): (4 / 3, -1 / 6),
    (1, 2): (4 / 3, -1 / 6),
    (1, 3): (3 / 2, -3 / 10, 1 / 30),
    (2, 0): (3.0, -3 / 2, 1 / 3),
    (2, 1): (7 / 4, -1 / 2, 1 / 12),
    (2, 2): (3 / 2, -3 / 10, 1 / 30),
    (2, 3): (3 / 2, -3 / 10, 1 / 30),
    (3, 0): (4.0, -3.0, 4 / 3, -1 / 4),
    (3, 1): (11 / 5, -1.0, 1 / 3, -1 / 20),
    (3, 2): (26 / 15, -8 / 15, 2 / 15, -1 / 60),
    (3, 3): (8 / 5, -2 / 5, 8 / 105, -1 / 140),
}

_IM = {
    (0, 0): (-1.0, 1.0),
    (0, 1): (0.0,),
    (0, 2): (1 / 2, -2 / 3, 1 / 6),
    (0, 3): (5 / 6, -5 / 4, 1 / 2, -1 / 12),
    (1, 0): (-3 / 2, 2.0, -1 / 2),
    (1, 1): (-1 / 2, 2 / 3, -1 / 6),
    (1, 2): (0.0,),
    (1, 3): (1 / 3, -1 / 2, 1 / 5, -1 / 30),
    (2, 0): (-11 / 6, 3.0, -3 / 2, 1 / 3),
    (2, 1): (-5 / 6, 5 / 4, -1 / 2, 1 / 12),
    (2, 2): (-1 / 3, 1 / 2, -1 / 5, 1 / 30),
    (2, 3): (0.0,),
    (3, 0): (-25 / 12, 4.0, -3.0, 4 / 3, -1 / 4),
    (3, 1): (-13 / 12, 9 / 5, -1.0, 1 / 3, -1 / 20),
    (3, 2): (-7 / 12, 14 / 15, -7 / 15, 2 / 15, -1 / 60),
    (3, 3): (-1 / 4, 2 / 5, -1 / 5, 2 / 35, -1 / 140),
}


class SpectralSample(NamedTuple):
    kappa: float
    kappa_prime_re: float  # dispersion
    kappa_prime_im: float  # dissipation


def analytic_modified_wavenumber(s, kappa) -> SpectralSample:
    if not 0.0 <= kappa <= math.pi:
        raise ValueError("kappa must lie in [0, pi]")
    re = sum(a * math.sin((k + 1) * kappa) for k, a in enumerate(_RE[s]))
    imc = _IM[s]
    im = imc[0] + sum(c * math.cos(k * kappa) for k, c in enumerate(imc[1:], start=1))
    return SpectralSample(kappa, re, im)


def linear_stability_screen(n_samples=10_000):
    """Stencils with nonpositive dissipation everywhere, minus the
    large-dispersion-error (1, 0) stencil."""
    kappas = np.linspace(0.0, math.pi, n_samples)
    stable = set()
    for s in _IM:
        im = np.array([analytic_modified_wavenumber(s, k).kappa_prime_im for k in kappas])
        if np.all(im <= 1e-12):
            stable.add(s)
    stable.discard((1, 0))
    return stable


def _scheme_code(scheme):
    if isinstance(scheme, tuple):
        return kernels.stencil_code(*scheme)
    return kernels.SCHEME_CODES[scheme]


def adr(scheme, kappa, n_points=64, tau_factor=1e-6, delta=1e-5, eps=1e-40,
        p=1.0) -> SpectralSample:
    """Numerically measured modified wavenumber at kappa = 2*pi*mode/n_points."""
    if n_points < 8:
        raise ValueError("n_points must be at least 8")
    mode = kappa * n_points / (2 * math.pi)
    mode_i = round(mode)
    if mode_i < 1 or abs(mode - mode_i) > 1e-9:
        raise ValueError(
            f"kappa={kappa} is not a grid mode: need kappa = 2*pi*m/{n_points}"
        )

    dx = 1.0
    tau = tau_factor * dx
    code = _scheme_code(scheme)
    j = np.arange(n_points)
    ur = np.cos(kappa * j)
    ui = np.sin(kappa * j)

    def step(u):
        rate = scalar.semidiscrete_rhs(
            u, dx, scalar.LINEAR_ADVECTION, code, delta, eps, p, alpha=1.0
        )
        return u + tau * rate

    carrier = np.exp(-1j * kappa * j)

    def mode_amp(ur_, ui_):
        return np.sum((ur_ + 1j * ui_) * carrier) / n_points

    a0 = mode_amp(ur, ui)
    a1 = mode_amp(step(ur), step(ui))
    if abs(a1) < 1e-300 or abs(a0) < 1e-300:
        raise scalar.NumericsError("probed mode amplitude underflowed")
    kp = 1j * dx / tau * cmath.log(a1 / a0)
    return SpectralSample(kappa, kp.real, kp.imag)
