"""Benchmark case registry.

Each case carries the exact published setup: domain, gamma, initial
condition, per-side boundary treatment, end time and default mesh density
(N = points per unit length, dx = 1/N). Scalar advection cases run on
periodic node grids with the endpoints identified; Euler cases run on
node-centered grids including both endpoints (n = L*N + 1 points).
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import scalar


@dataclass(frozen=True)
class CaseSpec:
    name: str
    kind: str  # "scalar" or "euler"
    dim: int
    domain: tuple  # ((x0, x1),) or ((x0, x1), (y0, y1))
    t_end: float
    default_n: int  # 1/dx
    gamma: float = 1.4
    full_n: Optional[int] = None
    boundaries: dict = field(default_factory=dict)
    source: bool = False
    description: str = ""

    def grid_1d(self, n=None):
        """(x, dx). Periodic scalar grids identify the endpoints."""
        n = n or self.default_n
        x0, x1 = self.domain[0]
        dx = 1.0 / n
        npts = round((x1 - x0) * n)
        if self.kind == "scalar":
            return x0 + dx * np.arange(npts), dx
        return x0 + dx * np.arange(npts + 1), dx

    def grid_2d(self, n=None):
        """(x, y, dx, dy) node-centered including the boundaries."""
        n = n or self.default_n
        (x0, x1), (y0, y1) = self.domain
        d = 1.0 / n
        nx = round((x1 - x0) * n) + 1
        ny = round((y1 - y0) * n) + 1
        return x0 + d * np.arange(nx), y0 + d * np.arange(ny), d, d


def _sine_init(x):
    return np.sin(np.pi * x)


def _sine_exact(x, t):
    return np.sin(np.pi * (x - t))


def _composite_exact(x, t):
    x0 = np.mod(x - t + 1.0, 2.0) - 1.0
    return scalar.composite_wave_initial(x0)


def _lax_init(x):
    left = np.array([0.445, 0.698, 3.528])
    right = np.array([0.5, 0.0, 0.571])
    prim = np.where(x[None, :] < 1.0, left[:, None], right[:, None])
    return prim  # (rho, u, p) rows


def _titarev_init(x):
    rho = np.where(x < -4.5, 1.515695, 1.0 + 0.1 * np.sin(20.0 * np.pi * x))
    u = np.where(x < -4.5, 0.523346, 0.0)
    p = np.where(x < -4.5, 1.805, 1.0)
    return np.stack([rho, u, p])


def _quadrant_init(states):
    """states: (q_lower_left, q_upper_left, q_upper_right, q_lower_right)."""

    def init(X, Y):
        ll, ul, ur, lr = (np.array(s, dtype=np.float64) for s in states)
        out = np.empty((4,) + X.shape)
        left = X < 0.0
        low = Y < 0.0
        for comp in range(4):
            out[comp] = np.where(
                left,
                np.where(low, ll[comp], ul[comp]),
                np.where(low, lr[comp], ur[comp]),
            )
        return out  # (rho, u, v, p)

    return init


DMR_POST = (8.0, 8.25 * math.sin(math.pi / 3.0), -8.25 * math.cos(math.pi / 3.0), 116.5)
DMR_PRE = (1.4, 0.0, 0.0, 1.0)


def dmr_shock_x(t, y=1.0):
    """x-position of the oblique shock at height y and time t."""
    return 1.0 / 6.0 + (y + 20.0 * t) / math.sqrt(3.0)


def _dmr_init(X, Y):
    post = X <= 1.0 / 6.0 + Y / math.sqrt(3.0)
    out = np.empty((4,) + X.shape)
    for comp in range(4):
        out[comp] = np.where(post, DMR_POST[comp], DMR_PRE[comp])
    return out


def _rti_init(X, Y, gamma=5.0 / 3.0):
    lower = Y < 0.5
    rho = np.where(lower, 2.0, 1.0)
    p = np.where(lower, 2.0 * Y + 1.0, Y + 1.5)
    v = -0.025 * np.sqrt(gamma * p / rho) * np.cos(8.0 * np.pi * X)
    return np.stack([rho, np.zeros_like(X), v, p])


RTI_BOTTOM = (2.0, 0.0, 0.0, 1.0)
RTI_TOP = (1.0, 0.0, 0.0, 2.5)

_SCALAR_INITS = {
    "advection_sine": (_sine_init, _sine_exact),
    "advection_composite": (scalar.composite_wave_initial, _composite_exact),
}

_EULER_1D_INITS = {"lax": _lax_init, "titarev_toro": _titarev_init}

_EULER_2D_INITS = {
    "rp_config1": _quadrant_init(
        (
            (0.138, 1.206, 1.206, 0.029),
            (0.5323, 1.206, 0.0, 0.3),
            (1.5, 0.0, 0.0, 1.5),
            (0.5323, 0.0, 1.206, 0.3),
        )
    ),
    "rp_config2": _quadrant_init(
        (
            (1.0, -0.75, 0.5, 1.0),
            (2.0, 0.75, 0.5, 1.0),
            (1.0, 0.75, -0.5, 1.0),
            (3.0, -0.75, -0.5, 1.0),
        )
    ),
    "dmr": _dmr_init,
    "rti": _rti_init,
}


def register_cases():
    ext = ("extrapolate", None)
    cases = [
        CaseSpec(
            "advection_sine", "scalar", 1, ((-1.0, 1.0),), 2.0, 50,
            boundaries={"x": ("periodic", None)},
            description="linear advection of sin(pi x), convergence case",
        ),
        CaseSpec(
            "advection_composite", "scalar", 1, ((-1.0, 1.0),), 20.0, 200,
            boundaries={"x": ("periodic", None)},
            description="Gaussians / square / triangle / half-ellipse advection",
        ),
        CaseSpec(
            "lax", "euler", 1, ((0.0, 2.0),), 0.26, 100,
            boundaries={"left": ext, "right": ext},
            description="Lax shock tube, jump at x=1",
        ),
        CaseSpec(
            "titarev_toro", "euler", 1, ((-5.0, 5.0),), 5.0, 200, full_n=1000,
            boundaries={"left": ext, "right": ext},
            description="shock / entropy-wave interaction, jump at x=-4.5",
        ),
        CaseSpec(
            "rp_config1", "euler", 2, ((-1.0, 1.0), (-1.0, 1.0)), 1.0, 200,
            full_n=400,
            boundaries={"left": ext, "right": ext, "bottom": ext, "top": ext},
            description="2D Riemann problem, four interacting shocks",
        ),
        CaseSpec(
            "rp_config2", "euler", 2, ((-1.0, 1.0), (-1.0, 1.0)), 1.0, 200,
            full_n=400,
            boundaries={"left": ext, "right": ext, "bottom": ext, "top": ext},
            description="2D Riemann problem, four contact discontinuities",
        ),
        CaseSpec(
            "dmr", "euler", 2, ((0.0, 4.0), (0.0, 1.0)), 0.28, 200, full_n=400,
            boundaries={
                "left": ("dirichlet", DMR_POST),
                "right": ext,
                "bottom": ("dmr_bottom", None),
                "top": ("dmr_top", None),
            },
            description="Mach 10 double Mach reflection over a ramp wall",
        ),
        CaseSpec(
            "rti", "euler", 2, ((0.0, 0.25), (0.0, 1.0)), 1.95, 256,
            full_n=1024, gamma=5.0 / 3.0, source=True,
            boundaries={
                "left": ("reflect", None),
                "right": ("reflect", None),
                "bottom": ("dirichlet", RTI_BOTTOM),
                "top": ("dirichlet", RTI_TOP),
            },
            description="Rayleigh-Taylor instability with gravity source",
        ),
    ]
    return {c.name: c for c in cases}


CASES = register_cases()


def scalar_initial(case: CaseSpec, x):
    return _SCALAR_INITS[case.name][0](np.asarray(x))


def scalar_exact(case: CaseSpec, x, t):
    return _SCALAR_INITS[case.name][1](np.asarray(x), t)


def euler_initial_prim(case: CaseSpec, x, y=None):
    """Primitive initial fields: (rho,u,p) in 1D, (rho,u,v,p) in 2D."""
    if case.dim == 1:
        return _EULER_1D_INITS[case.name](np.asarray(x))
    X, Y = np.meshgrid(np.asarray(x), np.asarray(y))  # shape (ny, nx)
    if case.name == "rti":
        return _EULER_2D_INITS[case.name](X, Y, case.gamma)
    return _EULER_2D_INITS[case.name](X, Y)
