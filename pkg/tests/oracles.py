"""Independent brute-force oracles used by several test modules.

These deliberately avoid the adaptive quadrature path: the integrands are
rebuilt from the vectorized reflection functions and integrated on fixed
trapezoid grids, and the series constant is summed directly from
log-gamma evaluations of the double factorials.
"""

import math

import numpy as np

from kerr_casimir.quantities import CONST
from kerr_casimir.reflection import fresnel, inplane_kerr_factors, polar_kerr_amplitude

KINDS = ("energy-sp", "force-sp", "energy-dpp", "force-dpp")


def kernel_grid(model, D, config, kind, x, y):
    """Evaluate one integral kernel on the meshgrid of x (axis 0) and y."""
    X, Y = np.meshgrid(x, y, indexing="ij")
    kc = X * CONST.hbar_c / (2.0 * D)
    w = Y * kc
    exx = model.eps_xx(w)
    exy = model.eps_xy(w)
    rss, rpp = fresnel(w, kc, exx)
    if config == "polar":
        amp = polar_kerr_amplitude(w, kc, exx, exy)
        sp2 = amp * amp
        dpp2 = np.zeros_like(sp2)
    else:
        g, h = inplane_kerr_factors(w, kc, exx, exy)
        sp2 = -g * g
        dpp2 = -h * h
    ex = np.exp(-X)
    rss2 = rss * rss
    rpp2 = rpp * rpp
    if kind == "energy-sp":
        return X**2 * sp2 * ex / ((1 - rss2 * ex) * (1 - rpp2 * ex))
    if kind == "force-sp":
        den = (1 - rss2 * ex) * (1 - rpp2 * ex)
        return X**3 * sp2 * (1 - rss2 * rpp2 * ex * ex) * ex / den**2
    if kind == "energy-dpp":
        return X**2 * dpp2 * ex / (1 - rpp2 * ex) ** 2
    if kind == "force-dpp":
        return X**3 * dpp2 * (1 + rpp2 * ex) * ex / (1 - rpp2 * ex) ** 3
    raise ValueError(kind)


def trapezoid_integral(model, D, config, kind, n_x=2000, n_y=2000, x_max=60.0):
    """Fixed-grid trapezoid value of one dimensionless kernel integral."""
    x_full = np.linspace(0.0, x_max, n_x)
    y_full = np.linspace(0.0, 1.0, n_y)
    f = np.zeros((n_x, n_y))
    # the kernels vanish at x=0 and y=0; evaluate everywhere else
    f[1:, 1:] = kernel_grid(model, D, config, kind, x_full[1:], y_full[1:])
    return float(np.trapezoid(np.trapezoid(f, y_full, axis=1), x_full))


def series_direct(n_terms=10_000):
    """Sum (4n+3)!!/((n+1)(4n+6)!!) from log-gamma double factorials.

    The terms decay like n^(-5/2); the truncated sum is completed with the
    same closed-form power-law tail estimate the production code uses, so
    the two computations share only the tail formula, not the term values.
    """
    total = 0.0
    t = 0.0
    for n in range(n_terms):
        # (4n+3)!! = Gamma(4n+4) / (2^(2n+1) Gamma(2n+2))
        # (4n+6)!! = 2^(2n+3) Gamma(2n+4)
        log_odd = math.lgamma(4 * n + 4) - (2 * n + 1) * math.log(2.0) \
            - math.lgamma(2 * n + 2)
        log_even = (2 * n + 3) * math.log(2.0) + math.lgamma(2 * n + 4)
        t = math.exp(log_odd - log_even) / (n + 1)
        total += t
    n = n_terms - 1
    tail = t * n**2.5 * (n + 0.5) ** -1.5 / 1.5
    return total + tail
