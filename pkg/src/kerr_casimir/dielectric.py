"""Closed-form dielectric tensor models on the imaginary frequency axis.

All frequencies are photon energies in eV (see :mod:`kerr_casimir.quantities`).
Two models ship with the package:

* Drude: free-carrier diagonal and off-diagonal response, controlled by the
  plasma energy, the cyclotron energy and the relaxation energy hbar/tau.
* Hybrid: plasma-model diagonal response combined with a single absorption
  line for the off-diagonal element, transformed to the imaginary axis.

Positive ``omega_c`` / ``eps_xy_eff`` produce positive eps_xy(i omega);
magnetization reversal is modeled by negating eps_xy.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable

import numpy as np


@runtime_checkable
class DielectricResponse(Protocol):
    """Dielectric tensor evaluated at imaginary frequency.

    ``eps_xx(omega) >= 1`` and ``eps_xy(omega) -> 0`` as omega grows, for
    omega > 0 in eV.  Implementations must be pure and reentrant.
    """

    def eps_xx(self, omega):
        ...

    def eps_xy(self, omega):
        ...


def _require_positive(omega) -> None:
    if not np.all(np.asarray(omega) > 0):
        raise ValueError("omega must be > 0 (imaginary-axis response diverges at 0)")


@dataclass(frozen=True)
class DrudeParams:
    """Drude model parameters, all in eV.

    ``omega_c`` may carry either sign (sign of the magnetization); its
    magnitude is normally far below ``inv_tau``, which in turn sits far
    below ``omega_p``.  Violating that ordering is unusual but not an
    error, so it only warns.
    """

    omega_p: float
    omega_c: float
    inv_tau: float

    def __post_init__(self):
        if self.omega_p <= 0 or self.inv_tau <= 0:
            raise ValueError("omega_p and inv_tau must be > 0")
        if abs(self.omega_c) >= self.inv_tau or self.omega_p <= self.inv_tau:
            warnings.warn(
                "unusual parameter ordering: expected |omega_c| << inv_tau << omega_p",
                stacklevel=2,
            )


@dataclass(frozen=True)
class HybridParams:
    """Plasma diagonal + single-absorption-line off-diagonal model, eV.

    ``omega_star`` is the logarithmic cutoff of the short-distance energy
    formulas; it defaults to 2*e*omega_p.
    """

    omega_p: float
    omega_0: float
    eps_xy_eff: float
    omega_star: float = field(default=0.0)

    def __post_init__(self):
        if self.omega_p <= 0 or self.omega_0 <= 0:
            raise ValueError("omega_p and omega_0 must be > 0")
        if self.omega_star == 0.0:
            object.__setattr__(self, "omega_star", 2.0 * math.e * self.omega_p)
        elif self.omega_star <= 0:
            raise ValueError("omega_star must be > 0")


def drude_eps_xx(omega, p: DrudeParams):
    """1 + omega_p^2 / (omega (omega + inv_tau)), always > 1."""
    _require_positive(omega)
    return 1.0 + p.omega_p**2 / (omega * (omega + p.inv_tau))


def drude_eps_xy(omega, p: DrudeParams):
    """omega_p^2 omega_c / (omega (omega + inv_tau)^2); sign follows omega_c."""
    _require_positive(omega)
    return p.omega_p**2 * p.omega_c / (omega * (omega + p.inv_tau) ** 2)


def plasma_eps_xx(omega, p: HybridParams):
    """1 + omega_p^2 / omega^2."""
    _require_positive(omega)
    return 1.0 + p.omega_p**2 / omega**2


def hybrid_eps_xy(omega, p: HybridParams):
    """(2/pi) omega_0^3 eps_xy_eff / (omega (omega_0^2 + omega^2))."""
    _require_positive(omega)
    return (2.0 / math.pi) * p.omega_0**3 * p.eps_xy_eff / (
        omega * (p.omega_0**2 + omega**2)
    )


@dataclass(frozen=True)
class DrudeModel:
    params: DrudeParams

    def eps_xx(self, omega):
        return drude_eps_xx(omega, self.params)

    def eps_xy(self, omega):
        return drude_eps_xy(omega, self.params)


@dataclass(frozen=True)
class HybridModel:
    params: HybridParams

    def eps_xx(self, omega):
        return plasma_eps_xx(omega, self.params)

    def eps_xy(self, omega):
        return hybrid_eps_xy(omega, self.params)


@dataclass(frozen=True)
class ReversedMagnetization:
    """Wrap any model with the magnetization direction flipped."""

    inner: DielectricResponse

    def eps_xx(self, omega):
        return self.inner.eps_xx(omega)

    def eps_xy(self, omega):
        return -self.inner.eps_xy(omega)


# Default example parameters used throughout the docs and the CLI.
DRUDE_DEFAULTS = DrudeParams(omega_p=9.85, omega_c=5.9e-3, inv_tau=6.58e-3)
HYBRID_DEFAULTS = HybridParams(omega_p=9.85, omega_0=3.9, eps_xy_eff=1.5e-2)


def default_drude_model() -> DrudeModel:
    return DrudeModel(DRUDE_DEFAULTS)


def default_hybrid_model() -> HybridModel:
    return HybridModel(HYBRID_DEFAULTS)
