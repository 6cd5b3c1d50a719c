"""Adaptive-order ENO / WENO-Z finite-difference solvers for hyperbolic
conservation laws, with spectral analysis tools and a benchmark harness."""

from .reconstruct import (
    eno_ao_reconstruct,
    eno_ao_select,
    jiang_shu_beta,
    linear_reconstruct,
    weno_z_reconstruct,
    weno_z_weights,
)
from .stencils import ORDER5, ORDER7, smoothness_pair, stencil_flux

__all__ = [
    "ORDER5",
    "ORDER7",
    "eno_ao_reconstruct",
    "eno_ao_select",
    "jiang_shu_beta",
    "linear_reconstruct",
    "smoothness_pair",
    "stencil_flux",
    "weno_z_reconstruct",
    "weno_z_weights",
]
