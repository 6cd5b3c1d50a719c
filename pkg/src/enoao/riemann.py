"""Exact Riemann solver for the 1D Euler equations (iterative pressure solve).

Used as the reference solution for shock-tube benchmarks. States are
(rho, u, p) primitive triples.
"""

import math

import numpy as np


def _pressure_function(p, rho_k, p_k, gamma):
    """f_K(p) and its derivative for one side of the star region."""
    a_k = math.sqrt(gamma * p_k / rho_k)
    if p > p_k:  # shock
        A = 2.0 / ((gamma + 1.0) * rho_k)
        B = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = math.sqrt(A / (p + B))
        f = (p - p_k) * root
        df = root * (1.0 - 0.5 * (p - p_k) / (p + B))
    else:  # rarefaction
        f = 2.0 * a_k / (gamma - 1.0) * ((p / p_k) ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)
        df = (p / p_k) ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * a_k)
    return f, df


def star_state(left, right, gamma=1.4, tol=1e-12, max_iter=100):
    """Pressure and velocity in the star region between the acoustic waves."""
    rl, ul, pl = left
    rr, ur, pr = right
    al = math.sqrt(gamma * pl / rl)
    ar = math.sqrt(gamma * pr / rr)
    if 2.0 * (al + ar) / (gamma - 1.0) <= ur - ul:
        raise ValueError("vacuum is generated; no star state exists")

    # two-rarefaction guess, clipped away from zero
    z = (gamma - 1.0) / (2.0 * gamma)
    p = ((al + ar - 0.5 * (gamma - 1.0) * (ur - ul)) / (al / pl ** z + ar / pr ** z)) ** (1.0 / z)
    p = max(p, tol)
    for _ in range(max_iter):
        fl, dfl = _pressure_function(p, rl, pl, gamma)
        fr, dfr = _pressure_function(p, rr, pr, gamma)
        dp = (fl + fr + ur - ul) / (dfl + dfr)
        p_new = max(p - dp, tol)
        if abs(p_new - p) <= tol * (1.0 + p):
            p = p_new
            break
        p = p_new
    fl, _ = _pressure_function(p, rl, pl, gamma)
    fr, _ = _pressure_function(p, rr, pr, gamma)
    u = 0.5 * (ul + ur) + 0.5 * (fr - fl)
    return p, u


def sample(left, right, xi, gamma=1.4):
    """Self-similar solution (rho, u, p) at speed xi = x/t."""
    rl, ul, pl = left
    rr, ur, pr = right
    p_star, u_star = star_state(left, right, gamma)
    g1 = (gamma - 1.0) / (gamma + 1.0)

    if xi <= u_star:  # left of the contact
        a = math.sqrt(gamma * pl / rl)
        if p_star > pl:  # left shock
            s = ul - a * math.sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / pl
                                   + (gamma - 1.0) / (2.0 * gamma))
            if xi <= s:
                return rl, ul, pl
            rho = rl * (p_star / pl + g1) / (g1 * p_star / pl + 1.0)
            return rho, u_star, p_star
        # left rarefaction
        a_star = a * (p_star / pl) ** ((gamma - 1.0) / (2.0 * gamma))
        if xi <= ul - a:
            return rl, ul, pl
        if xi >= u_star - a_star:
            rho = rl * (p_star / pl) ** (1.0 / gamma)
            return rho, u_star, p_star
        u = 2.0 / (gamma + 1.0) * (a + 0.5 * (gamma - 1.0) * ul + xi)
        af = 2.0 / (gamma + 1.0) * (a + 0.5 * (gamma - 1.0) * (ul - xi))
        rho = rl * (af / a) ** (2.0 / (gamma - 1.0))
        return rho, u, pl * (af / a) ** (2.0 * gamma / (gamma - 1.0))

    # right of the contact
    a = math.sqrt(gamma * pr / rr)
    if p_star > pr:  # right shock
        s = ur + a * math.sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / pr
                               + (gamma - 1.0) / (2.0 * gamma))
        if xi >= s:
            return rr, ur, pr
        rho = rr * (p_star / pr + g1) / (g1 * p_star / pr + 1.0)
        return rho, u_star, p_star
    # right rarefaction
    a_star = a * (p_star / pr) ** ((gamma - 1.0) / (2.0 * gamma))
    if xi >= ur + a:
        return rr, ur, pr
    if xi <= u_star + a_star:
        rho = rr * (p_star / pr) ** (1.0 / gamma)
        return rho, u_star, p_star
    u = 2.0 / (gamma + 1.0) * (-a + 0.5 * (gamma - 1.0) * ur + xi)
    af = 2.0 / (gamma + 1.0) * (a - 0.5 * (gamma - 1.0) * (ur - xi))
    rho = rr * (af / a) ** (2.0 / (gamma - 1.0))
    return rho, u, pr * (af / a) ** (2.0 * gamma / (gamma - 1.0))


def solution_profile(left, right, x, t, x0=0.0, gamma=1.4):
    """Vectorized (rho, u, p) arrays at positions x and time t > 0."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty((3, x.size))
    if t <= 0.0:
        # initial data: the similarity variable degenerates to +/- infinity
        xis = np.where(x < x0, -np.inf, np.inf)
    else:
        xis = (x - x0) / t
    for i, xi in enumerate(xis):
        out[:, i] = sample(left, right, xi, gamma)
    return out[0], out[1], out[2]
