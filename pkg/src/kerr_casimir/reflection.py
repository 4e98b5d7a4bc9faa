"""Magneto-optical reflection coefficients at imaginary (omega, k_perp).

Conventions: ``omega`` is the photon energy hbar*omega in eV, ``kc`` is the
transverse wavevector energy hbar*c*k_perp in eV, and the physical domain is
0 < omega <= kc.

The diagonal amplitudes r_ss, r_pp are real on the imaginary axis.  The
off-diagonal quantities enter the interaction integrals only squared (or,
for two different mirrors, as products of per-mirror amplitudes), so they
are represented by real numbers with an explicit sign:

* polar Kerr amplitude: real, its square is >= 0;
* in-plane (longitudinal and transversal) amplitudes: purely imaginary,
  written as i*g and i*h with g, h real, so their squares are -g^2 <= 0
  and -h^2 <= 0.  No complex arithmetic is ever needed.

All functions accept floats or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dielectric import DielectricResponse


@dataclass(frozen=True)
class KPoint:
    """One (omega, kc) node of the integration domain, both eV."""

    omega: float
    kc: float

    def __post_init__(self):
        if not (0 < self.omega <= self.kc):
            raise ValueError(f"need 0 < omega <= kc, got ({self.omega}, {self.kc})")


@dataclass(frozen=True)
class MoCoefficients:
    """Reflection data of one mirror at one (omega, kc) point.

    ``rsp2`` and ``drpp2`` are the squares of the active configuration's
    off-diagonal amplitudes; they may be negative (squares of imaginary
    amplitudes).  ``drpp2`` is zero in the polar configuration.
    """

    r_ss: float
    r_pp: float
    rsp2: float
    drpp2: float
    xi: float


def xi(omega, kc, eps_xx):
    """Medium-side decay combination sqrt(omega^2 (eps_xx - 1) + kc^2)."""
    if np.any(np.asarray(eps_xx) < 1.0):
        raise ValueError("eps_xx < 1 is outside the supported model family")
    return np.sqrt(omega * omega * (eps_xx - 1.0) + kc * kc)


def fresnel(omega, kc, eps_xx):
    """Diagonal amplitudes (r_ss, r_pp); -1 <= r_ss <= 0 <= r_pp <= 1."""
    x = xi(omega, kc, eps_xx)
    r_ss = (kc - x) / (kc + x)
    r_pp = (eps_xx * kc - x) / (eps_xx * kc + x)
    return r_ss, r_pp


def polar_kerr_amplitude(omega, kc, eps_xx, eps_xy):
    """The polar off-diagonal amplitude; real on the imaginary axis."""
    x = xi(omega, kc, eps_xx)
    return -kc * omega * eps_xy / ((kc + x) * (eps_xx * kc + x))


def rsp2_polar(omega, kc, eps_xx, eps_xy):
    """Square of the polar Kerr amplitude, >= 0."""
    return polar_kerr_amplitude(omega, kc, eps_xx, eps_xy) ** 2


def inplane_kerr_factors(omega, kc, eps_xx, eps_xy):
    """Real factors (g, h) of the in-plane amplitudes i*g and i*h.

    g carries the longitudinal Kerr mixing, h the transversal r_pp change.
    The square root of omega^2 - kc^2 is imaginary on the physical domain,
    so only sqrt(kc^2 - omega^2) ever appears.
    """
    x = xi(omega, kc, eps_xx)
    q = np.sqrt(np.maximum(kc * kc - omega * omega, 0.0))
    g = -q * omega * eps_xy * kc / ((kc + x) * (eps_xx * kc + x) * x)
    h = 2.0 * q * eps_xy * kc / (eps_xx * kc + x) ** 2
    return g, h


def rsp2_inplane(omega, kc, eps_xx, eps_xy):
    """Square of the longitudinal in-plane amplitude, <= 0."""
    g, _ = inplane_kerr_factors(omega, kc, eps_xx, eps_xy)
    return -(g * g)


def drpp2_inplane(omega, kc, eps_xx, eps_xy):
    """Square of the transversal r_pp change, <= 0."""
    _, h = inplane_kerr_factors(omega, kc, eps_xx, eps_xy)
    return -(h * h)


def coefficients(model: DielectricResponse, pt: KPoint, config: str) -> MoCoefficients:
    """All reflection data of one mirror at one point.

    ``config`` is "polar" or "in-plane".
    """
    e_xx = model.eps_xx(pt.omega)
    e_xy = model.eps_xy(pt.omega)
    x = xi(pt.omega, pt.kc, e_xx)
    r_ss, r_pp = fresnel(pt.omega, pt.kc, e_xx)
    if config == "polar":
        rsp2 = rsp2_polar(pt.omega, pt.kc, e_xx, e_xy)
        drpp2 = 0.0
    elif config == "in-plane":
        rsp2 = rsp2_inplane(pt.omega, pt.kc, e_xx, e_xy)
        drpp2 = drpp2_inplane(pt.omega, pt.kc, e_xx, e_xy)
    else:
        raise ValueError(f"unknown configuration {config!r}")
    return MoCoefficients(
        r_ss=float(r_ss), r_pp=float(r_pp), rsp2=float(rsp2),
        drpp2=float(drpp2), xi=float(x),
    )
