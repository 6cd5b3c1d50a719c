"""Run orchestration: configuration, time loops, CSV output, studies."""

import math
import os
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import cases, euler, riemann, scalar, spectral
from .kernels import SCHEME_CODES
from .scalar import GHOST

SCHEMES = ("UW5", "UW7", "WENO-Z5", "WENO-Z7", "ENO-AO5", "ENO-AO7")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    case: str
    scheme: str
    n: Optional[int] = None  # mesh density 1/dx; case default when None
    cfl: float = 0.3
    delta: float = 1e-5
    eps: float = 1e-40
    p: float = 1.0
    dt: Optional[float] = None
    t_end: Optional[float] = None
    out: Optional[str] = None
    full: bool = False

    def __post_init__(self):
        if self.case not in cases.CASES:
            raise ConfigError(f"unknown case {self.case!r}; see list-cases")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown scheme {self.scheme!r}; choose from {SCHEMES}")
        if self.cfl <= 0 or self.delta <= 0 or self.eps <= 0:
            raise ConfigError("cfl, delta and eps must all be positive")
        if self.n is not None and self.n < 5:
            raise ConfigError("mesh density n must be at least 5")

    def resolve(self):
        spec = cases.CASES[self.case]
        n = self.n
        if n is None:
            n = spec.full_n if (self.full and spec.full_n) else spec.default_n
        return spec, n, self.t_end if self.t_end is not None else spec.t_end


@dataclass
class RunResult:
    config: RunConfig
    spec: cases.CaseSpec
    n: int
    t_end: float
    steps: int
    wall_clock: float
    x: np.ndarray
    y: Optional[np.ndarray]
    fields: dict
    totals_initial: np.ndarray
    totals_final: np.ndarray
    flux_integral: np.ndarray
    source_integral: np.ndarray
    files: list = field(default_factory=list)

    @property
    def conservation_residual(self):
        """Relative mismatch of d(total)/dt against boundary flux + source."""
        expect = -self.flux_integral + self.source_integral
        scale = np.maximum(np.abs(self.totals_initial), 1.0)
        return np.abs((self.totals_final - self.totals_initial) - expect) / scale


def _fmt(v):
    return f"{v:.17g}"


def _write_csv(path, header, columns):
    rows = len(columns[0])
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for i in range(rows):
            fh.write(",".join(_fmt(c[i]) for c in columns) + "\n")


def _write_metadata(path, config: RunConfig, n, t_end, steps, wall, extra=None):
    spec = cases.CASES[config.case]
    lines = [
        "[run]",
        f"case={config.case}",
        f"scheme={config.scheme}",
        f"n={n}",
        f"gamma={_fmt(spec.gamma)}",
        f"cfl={_fmt(config.cfl)}",
        f"delta={_fmt(config.delta)}",
        f"eps={_fmt(config.eps)}",
        f"p={_fmt(config.p)}",
        f"t_end={_fmt(t_end)}",
        f"steps={steps}",
        f"wall_clock_seconds={wall:.3f}",
    ]
    if extra:
        lines += [f"{k}={v}" for k, v in extra.items()]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# Boundary assembly -----------------------------------------------------------

def make_boundary_filler(spec: cases.CaseSpec, xg, yg):
    """fill(Uext, t) for an Euler case; xg/yg are extended coordinates."""
    gamma = spec.gamma
    one_d = spec.dim == 1

    def to_cons(prim4):
        return euler.prim_to_cons(prim4[0], prim4[1], prim4[2], prim4[3], gamma)

    dir_states = {
        side: to_cons(par)
        for side, (kind, par) in spec.boundaries.items()
        if kind == "dirichlet"
    }

    def fill(U, t):
        for side in ("left", "right"):
            kind, _ = spec.boundaries.get(side, ("extrapolate", None))
            if kind == "periodic":
                euler.fill_periodic_x(U)
            elif kind == "extrapolate":
                euler.fill_extrapolate(U, side)
            elif kind == "dirichlet":
                euler.fill_dirichlet(U, side, dir_states[side])
            elif kind == "reflect":
                euler.fill_reflect(U, side)
        if one_d:
            U[:, :GHOST, :] = U[:, GHOST : GHOST + 1, :]
            U[:, GHOST + 1 :, :] = U[:, GHOST : GHOST + 1, :]
            return
        for side in ("bottom", "top"):
            kind, _ = spec.boundaries[side]
            if kind == "extrapolate":
                euler.fill_extrapolate(U, side)
            elif kind == "dirichlet":
                euler.fill_dirichlet(U, side, dir_states[side])
            elif kind == "reflect":
                euler.fill_reflect(U, side)
            elif kind == "dmr_bottom":
                wall = xg > 1.0 / 6.0
                euler.fill_extrapolate(U, "bottom")
                sign = np.array([1.0, 1.0, -1.0, 1.0]).reshape(4, 1)
                for k in range(1, GHOST + 1):
                    mirrored = sign * U[:, GHOST + k, wall]
                    U[:, GHOST - k, wall] = mirrored
            elif kind == "dmr_top":
                post = to_cons(np.array(cases.DMR_POST))
                pre = to_cons(np.array(cases.DMR_PRE))
                for k in range(GHOST):
                    xs = cases.dmr_shock_x(t, y=yg[-GHOST + k])
                    row = np.where(xg[None, :] < xs, post[:, None], pre[:, None])
                    U[:, -GHOST + k, :] = row

    return fill


def _extended_coords(x, dx):
    i = np.arange(-GHOST, x.size + GHOST)
    return x[0] + i * dx


# Drivers ----------------------------------------------------------------------

def _run_scalar(config: RunConfig, spec, n, t_end):
    x, dx = spec.grid_1d(n)
    u0 = cases.scalar_initial(spec, x)
    t0 = time.perf_counter()
    steps = [0]

    u = u0.copy()
    t = 0.0
    while t < t_end - 1e-14:
        alpha = 1.0  # linear advection
        step = config.dt if config.dt is not None else config.cfl * dx / alpha
        step = min(step, t_end - t)
        u = scalar.rk3_step(
            u,
            lambda v: scalar.semidiscrete_rhs(
                v, dx, scalar.LINEAR_ADVECTION, config.scheme,
                config.delta, config.eps, config.p, alpha=alpha,
            ),
            step,
        )
        t += step
        steps[0] += 1
    wall = time.perf_counter() - t0

    exact = cases.scalar_exact(spec, x, t_end)
    tot0 = np.array([u0.sum() * dx])
    tot1 = np.array([u.sum() * dx])
    result = RunResult(
        config, spec, n, t_end, steps[0], wall, x, None,
        {"u": u, "u_exact": exact},
        tot0, tot1, np.zeros(1), np.zeros(1),
    )
    if config.out:
        os.makedirs(config.out, exist_ok=True)
        base = os.path.join(config.out, f"{spec.name}_{config.scheme}_n{n}")
        _write_csv(base + "_profile.csv", ["x", "u", "u_exact"], [x, u, exact])
        _write_metadata(base + "_meta.txt", config, n, t_end, steps[0], wall)
        result.files = [base + "_profile.csv", base + "_meta.txt"]
    return result


def _run_euler(config: RunConfig, spec, n, t_end):
    gamma = spec.gamma
    code = SCHEME_CODES[config.scheme]
    if spec.dim == 1:
        x, dx = spec.grid_1d(n)
        y, dy = None, 1.0
        prim = cases.euler_initial_prim(spec, x)
        U0 = euler.prim_to_cons(prim[0], prim[1], np.zeros_like(prim[0]), prim[2], gamma)
        U0 = U0[:, None, :]  # single row
        sweep_y = False
    else:
        x, y, dx, dy = spec.grid_2d(n)
        prim = cases.euler_initial_prim(spec, x, y)
        U0 = euler.prim_to_cons(prim[0], prim[1], prim[2], prim[3], gamma)
        sweep_y = True

    ny, nx = U0.shape[1], U0.shape[2]
    Uext = np.zeros((4, ny + 2 * GHOST, nx + 2 * GHOST))
    inner = np.s_[:, GHOST:-GHOST, GHOST:-GHOST]
    Uext[inner] = U0
    xg = _extended_coords(x, dx)
    fill = make_boundary_filler(spec, xg, None if y is None else _extended_coords(y, dy))

    def rhs(U):
        return euler.rhs_2d(
            U, gamma, code, dx, dy, config.delta, config.eps, config.p,
            gravity_source=spec.source, sweep_y=sweep_y,
        )

    dV = dx * (dy if sweep_y else 1.0)
    tot0 = Uext[inner].sum(axis=(1, 2)) * dV
    acc = {"flux": np.zeros(4), "source": np.zeros(4)}
    t = 0.0
    steps = 0
    t0 = time.perf_counter()
    while t < t_end - 1e-12:
        dt = config.dt
        if dt is None:
            dt = euler.cfl_dt(Uext[inner], gamma, config.cfl, dx, dy if sweep_y else None)
        dt = min(dt, t_end - t)
        try:
            Uext = euler.rk3_euler(Uext, dt, t, fill, rhs, acc)
        except scalar.NumericsError as exc:
            raise scalar.NumericsError(f"step {steps} (t={t:.6g}): {exc}") from exc
        t += dt
        steps += 1
    wall = time.perf_counter() - t0

    tot1 = Uext[inner].sum(axis=(1, 2)) * dV
    rho, u, v, p = euler.cons_to_prim(Uext[inner], gamma)
    fields = {"rho": rho, "u": u, "v": v, "p": p}
    result = RunResult(
        config, spec, n, t_end, steps, wall, x, y, fields,
        tot0, tot1, acc["flux"], acc["source"],
    )
    if config.out:
        os.makedirs(config.out, exist_ok=True)
        base = os.path.join(config.out, f"{spec.name}_{config.scheme}_n{n}")
        extra = {"conservation_residual_max": _fmt(result.conservation_residual.max())}
        if spec.dim == 1:
            cols = [x, rho[0], u[0], p[0]]
            header = ["x", "rho", "u", "p"]
            if spec.name == "lax":
                re_r, re_u, re_p = riemann.solution_profile(
                    (0.445, 0.698, 3.528), (0.5, 0.0, 0.571), x, t_end, x0=1.0, gamma=gamma
                )
                cols += [re_r, re_u, re_p]
                header += ["rho_exact", "u_exact", "p_exact"]
            _write_csv(base + "_profile.csv", header, cols)
            result.files.append(base + "_profile.csv")
        else:
            X, Y = np.meshgrid(x, y)
            _write_csv(
                base + "_field.csv",
                ["x", "y", "rho", "u", "v", "p"],
                [X.ravel(), Y.ravel(), rho.ravel(), u.ravel(), v.ravel(), p.ravel()],
            )
            result.files.append(base + "_field.csv")
        _write_metadata(base + "_meta.txt", config, n, t_end, steps, wall, extra)
        result.files.append(base + "_meta.txt")
    return result


def run(config: RunConfig) -> RunResult:
    spec, n, t_end = config.resolve()
    if spec.kind == "scalar":
        return _run_scalar(config, spec, n, t_end)
    return _run_euler(config, spec, n, t_end)


# Studies -----------------------------------------------------------------------

def convergence_study(scheme, n_list=(20, 30, 40, 50), case="advection_sine",
                      out=None):
    """Rows (n, L1, L1 order, Linf, Linf order) with dt = dx^(order/3+1)."""
    order = 7 if scheme.endswith("7") else 5
    expo = 5.0 / 3.0 if order == 5 else 7.0 / 3.0
    rows = []
    for n in n_list:
        dx = 1.0 / n
        cfg = RunConfig(case=case, scheme=scheme, n=n, dt=dx ** expo)
        res = run(cfg)
        l1, linf = scalar.error_norms(res.fields["u"], res.fields["u_exact"])
        rows.append([n, l1, math.nan, linf, math.nan])
    for k in range(1, len(rows)):
        ratio = math.log(rows[k - 1][0]) - math.log(rows[k][0])  # log(dx_c/dx_f)
        rows[k][2] = (math.log(rows[k - 1][1]) - math.log(rows[k][1])) / -ratio
        rows[k][4] = (math.log(rows[k - 1][3]) - math.log(rows[k][3])) / -ratio
    if out:
        os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
        with open(out, "w") as fh:
            fh.write("n,l1,l1_order,linf,linf_order\n")
            for r in rows:
                fh.write(",".join("" if isinstance(v, float) and math.isnan(v)
                                  else _fmt(v) for v in r) + "\n")
    return rows


def adr_sweep(scheme, kappas=None, out=None, n_points=64):
    """(kappa, Re kappa', Im kappa') samples; kappa=0 row is exact (0,0)."""
    if kappas is None:
        kappas = 2.0 * math.pi * np.arange(0, n_points // 2 + 1) / n_points
    rows = []
    for kappa in np.asarray(kappas, dtype=np.float64):
        if kappa == 0.0:
            rows.append((0.0, 0.0, 0.0))
            continue
        s = spectral.adr(scheme, float(kappa), n_points=n_points)
        rows.append((s.kappa, s.kappa_prime_re, s.kappa_prime_im))
    if out:
        os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
        with open(out, "w") as fh:
            fh.write("kappa,kappa_prime_re,kappa_prime_im\n")
            for r in rows:
                fh.write(",".join(_fmt(v) for v in r) + "\n")
    return rows
