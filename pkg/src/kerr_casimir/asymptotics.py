"""Closed-form regime predictions and power-law fitting.

Each distance regime of each model admits closed-form leading-order
expressions for the interaction; they serve as oracles for the quadrature.
Every coefficient is encoded exactly once, in ``COEFFS``, keyed by
(regime, configuration, quantity).

Regime boundaries (Drude): long D >> c*tau, short D << c/omega_p,
intermediate in between.  The hybrid model only splits at c/omega_p.
In energy units c*tau = hbar_c/inv_tau and c/omega_p = hbar_c/omega_p.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .dielectric import DrudeParams, HybridParams
from .quantities import CONST

DRUDE_REGIMES = ("drude-long", "drude-intermediate", "drude-short")
HYBRID_REGIMES = ("hybrid-long", "hybrid-short")

_SQRT2 = math.sqrt(2.0)


def series_s(tol: float = 1e-12) -> float:
    """Constant of the short-distance transversal Kerr formulas.

    Sum of (4n+3)!!/((n+1)(4n+6)!!) by ratio recurrence (raw double
    factorials are never formed).  Terms decay only like n^(-5/2), so the
    truncated sum is completed with the power-law tail estimate; the
    result is accurate to ~1e-12.  Converged value: 0.090707211727.
    """
    if _SERIES_CACHE.get(tol) is None:
        t = 3.0 / 48.0
        s = t
        n = 0
        while t >= tol:
            t *= (4 * n + 5) * (4 * n + 7) * (n + 1) / ((n + 2) * (4 * n + 8) * (4 * n + 10))
            n += 1
            s += t
        tail = t * n**2.5 * (n + 0.5) ** -1.5 / 1.5
        _SERIES_CACHE[tol] = s + tail
    return _SERIES_CACHE[tol]


_SERIES_CACHE: dict = {}


def drude_regime(p: DrudeParams, D: float) -> str:
    c_tau = CONST.hbar_c / p.inv_tau
    c_over_wp = CONST.hbar_c / p.omega_p
    if D >= c_tau:
        return "drude-long"
    if D <= c_over_wp:
        return "drude-short"
    return "drude-intermediate"


def hybrid_regime(p: HybridParams, D: float) -> str:
    return "hybrid-long" if D >= CONST.hbar_c / p.omega_p else "hybrid-short"


def _hybrid_short_log(p: HybridParams, D: float) -> float:
    arg = CONST.hbar_c / (p.omega_star * D)
    if arg <= 1.0:
        raise ValueError(
            f"short-distance energy needs D < hbar_c/omega_star = "
            f"{CONST.hbar_c / p.omega_star:.4g} nm (log argument <= 1)"
        )
    return math.log(arg)


# Every closed-form coefficient lives here, once.  Keys are
# (regime, configuration, quantity); values map (params, D) to the
# prediction in internal units (eV/nm^2 for energies, eV/nm^3 for forces).
COEFFS = {
    # --- Drude, long distance -------------------------------------------
    ("drude-long", "polar", "delta_E"): lambda p, D: (
        -(3.0 * CONST.zeta3 / (16.0 * math.pi**2))
        * p.omega_c**2 / (p.inv_tau * p.omega_p**2) * CONST.hbar_c**2 / D**4
    ),
    ("drude-long", "polar", "delta_F"): lambda p, D: (
        -(3.0 * CONST.zeta3 / (4.0 * math.pi**2))
        * p.omega_c**2 / (p.inv_tau * p.omega_p**2) * CONST.hbar_c**2 / D**5
    ),
    ("drude-long", "in-plane", "e1"): lambda p, D: (
        -(CONST.zeta4 / (4.0 * math.pi**2))
        * p.omega_c**2 * CONST.hbar_c**3 / (p.omega_p**4 * D**5)
    ),
    ("drude-long", "in-plane", "e2"): lambda p, D: (
        +(CONST.zeta4 / (10.0 * math.pi**2))
        * p.omega_c**2 * CONST.hbar_c**3 / (p.omega_p**4 * D**5)
    ),
    ("drude-long", "in-plane", "f1"): lambda p, D: (
        -(5.0 * CONST.zeta4 / (4.0 * math.pi**2))
        * p.omega_c**2 * CONST.hbar_c**3 / (p.omega_p**4 * D**6)
    ),
    ("drude-long", "in-plane", "f2"): lambda p, D: (
        +(CONST.zeta4 / (2.0 * math.pi**2))
        * p.omega_c**2 * CONST.hbar_c**3 / (p.omega_p**4 * D**6)
    ),
    # --- Drude, intermediate --------------------------------------------
    ("drude-intermediate", "polar", "delta_E"): lambda p, D: (
        -(1.0 / 24.0) * CONST.hbar_c / D**3 * p.omega_c**2 / p.omega_p**2
    ),
    ("drude-intermediate", "polar", "delta_F"): lambda p, D: (
        -(1.0 / 8.0) * CONST.hbar_c / D**4 * p.omega_c**2 / p.omega_p**2
    ),
    # --- Drude, short distance ------------------------------------------
    ("drude-short", "polar", "delta_E"): lambda p, D: (
        -(1.0 / (16.0 * _SQRT2 * math.pi))
        * p.omega_c**2 * math.sqrt(p.omega_p) / (CONST.hbar_c**1.5 * D**0.5)
    ),
    ("drude-short", "polar", "delta_F"): lambda p, D: (
        -(1.0 / (32.0 * _SQRT2 * math.pi))
        * p.omega_c**2 * math.sqrt(p.omega_p) / (CONST.hbar_c**1.5 * D**1.5)
    ),
    ("drude-short", "in-plane", "e1"): lambda p, D: (
        -(1.0 / (96.0 * _SQRT2 * math.pi))
        * p.omega_c**2 * math.sqrt(p.omega_p) / (CONST.hbar_c**1.5 * D**0.5)
    ),
    ("drude-short", "in-plane", "f1"): lambda p, D: (
        -(1.0 / (192.0 * _SQRT2 * math.pi))
        * p.omega_c**2 * math.sqrt(p.omega_p) / (CONST.hbar_c**1.5 * D**1.5)
    ),
    ("drude-short", "in-plane", "e2"): lambda p, D: (
        +(series_s() / (16.0 * _SQRT2 * math.pi)) * p.omega_c**2 / (p.omega_p * D**2)
    ),
    ("drude-short", "in-plane", "f2"): lambda p, D: (
        +(series_s() / (8.0 * _SQRT2 * math.pi)) * p.omega_c**2 / (p.omega_p * D**3)
    ),
    # --- hybrid, long distance ------------------------------------------
    ("hybrid-long", "polar", "delta_E"): lambda p, D: (
        -(math.pi**2 / 210.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**5 / (p.omega_p**6 * D**7)
    ),
    ("hybrid-long", "polar", "delta_F"): lambda p, D: (
        -(math.pi**2 / 30.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**5 / (p.omega_p**6 * D**8)
    ),
    ("hybrid-long", "in-plane", "e1"): lambda p, D: (
        -(math.pi**4 / 1050.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**7 / (p.omega_p**8 * D**9)
    ),
    ("hybrid-long", "in-plane", "e2"): lambda p, D: (
        +(math.pi**4 / 945.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**7 / (p.omega_p**8 * D**9)
    ),
    ("hybrid-long", "in-plane", "f1"): lambda p, D: (
        -(9.0 * math.pi**4 / 1050.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**7 / (p.omega_p**8 * D**10)
    ),
    ("hybrid-long", "in-plane", "f2"): lambda p, D: (
        +(math.pi**4 / 105.0) * p.omega_0**2 * p.eps_xy_eff**2
        * CONST.hbar_c**7 / (p.omega_p**8 * D**10)
    ),
    # --- hybrid, short distance -----------------------------------------
    ("hybrid-short", "polar", "delta_E"): lambda p, D: (
        -(1.0 / (4.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2
        / ((p.omega_p + _SQRT2 * p.omega_0) ** 3 * CONST.hbar_c**2)
        * _hybrid_short_log(p, D)
    ),
    ("hybrid-short", "polar", "delta_F"): lambda p, D: (
        -(1.0 / (4.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2
        / ((p.omega_p + _SQRT2 * p.omega_0) ** 3 * CONST.hbar_c**2 * D)
    ),
    ("hybrid-short", "in-plane", "e1"): lambda p, D: (
        -(1.0 / (8.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2
        / ((p.omega_p + _SQRT2 * p.omega_0) ** 3 * CONST.hbar_c**2)
        * _hybrid_short_log(p, D)
    ),
    ("hybrid-short", "in-plane", "f1"): lambda p, D: (
        -(1.0 / (8.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2
        / ((p.omega_p + _SQRT2 * p.omega_0) ** 3 * CONST.hbar_c**2 * D)
    ),
    ("hybrid-short", "in-plane", "e2"): lambda p, D: (
        +(1.0 / (64.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2 * (p.omega_p + 5.0 * _SQRT2 * p.omega_0)
        / (p.omega_p * (p.omega_p + _SQRT2 * p.omega_0) ** 5 * D**2)
    ),
    ("hybrid-short", "in-plane", "f2"): lambda p, D: (
        +(1.0 / (32.0 * _SQRT2 * math.pi**3))
        * p.omega_0**6 * p.eps_xy_eff**2 * (p.omega_p + 5.0 * _SQRT2 * p.omega_0)
        / (p.omega_p * (p.omega_p + _SQRT2 * p.omega_0) ** 5 * D**3)
    ),
}


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Closed-form values at one distance, tagged with their origin."""

    regime: str
    config: str
    D: float
    delta_E: float
    delta_F: float
    e1: Optional[float] = None
    e2: Optional[float] = None
    f1: Optional[float] = None
    f2: Optional[float] = None

    @property
    def formula_id(self) -> str:
        return f"{self.regime}/{self.config}"


def _predict(params, D: float, config: str, regime: str) -> AsymptoticPrediction:
    if config == "polar":
        e = COEFFS[(regime, "polar", "delta_E")](params, D)
        f = COEFFS[(regime, "polar", "delta_F")](params, D)
        return AsymptoticPrediction(regime, config, D, e, f)
    if config != "in-plane":
        raise ValueError(f"unknown configuration {config!r}")
    e1 = COEFFS[(regime, "in-plane", "e1")](params, D)
    e2 = COEFFS[(regime, "in-plane", "e2")](params, D)
    f1 = COEFFS[(regime, "in-plane", "f1")](params, D)
    f2 = COEFFS[(regime, "in-plane", "f2")](params, D)
    return AsymptoticPrediction(regime, config, D, e1 + e2, f1 + f2,
                                e1=e1, e2=e2, f1=f1, f2=f2)


def drude_predict(p: DrudeParams, D: float, config: str,
                  regime: str) -> AsymptoticPrediction:
    """Closed-form Drude prediction; warns when D sits outside the regime.

    The in-plane coefficients are shared between the long and intermediate
    regimes, so both keys resolve to the same formulas.
    """
    if D <= 0:
        raise ValueError("D must be > 0")
    if regime not in DRUDE_REGIMES:
        raise ValueError(f"unknown Drude regime {regime!r}")
    actual = drude_regime(p, D)
    if actual != regime:
        warnings.warn(f"D = {D:g} nm classifies as {actual}, not {regime}")
    lookup = regime
    if config == "in-plane" and regime == "drude-intermediate":
        lookup = "drude-long"
    return _predict(p, D, config, lookup)


def hybrid_predict(p: HybridParams, D: float, config: str,
                   regime: str) -> AsymptoticPrediction:
    """Closed-form hybrid prediction; warns when D sits outside the regime."""
    if D <= 0:
        raise ValueError("D must be > 0")
    if regime not in HYBRID_REGIMES:
        raise ValueError(f"unknown hybrid regime {regime!r}")
    actual = hybrid_regime(p, D)
    if actual != regime:
        warnings.warn(f"D = {D:g} nm classifies as {actual}, not {regime}")
    return _predict(p, D, config, regime)


def fit_power_law(points: Sequence[tuple[float, float]]) -> tuple[float, float, float]:
    """Least-squares power-law fit v = prefactor * D^exponent.

    Requires >= 4 points of one sign spanning roughly half a decade in D
    (a factor of 3 or more).  Returns (exponent, prefactor, RMS of
    log-residuals).
    """
    if len(points) < 4:
        raise ValueError("need at least 4 points for a power-law fit")
    d = np.array([p[0] for p in points], dtype=float)
    v = np.array([p[1] for p in points], dtype=float)
    if np.any(v == 0.0) or (np.any(v > 0) and np.any(v < 0)):
        raise ValueError("mixed-sign values; split the data at the sign change")
    if d.max() / d.min() < 3.0:
        raise ValueError("D values must span at least a factor of 3")
    sign = 1.0 if v[0] > 0 else -1.0
    slope, intercept = np.polyfit(np.log(d), np.log(np.abs(v)), 1)
    resid = np.log(np.abs(v)) - (slope * np.log(d) + intercept)
    rms = float(np.sqrt(np.mean(resid**2)))
    return float(slope), sign * math.exp(intercept), rms
