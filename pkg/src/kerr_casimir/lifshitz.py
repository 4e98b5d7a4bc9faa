"""Adaptive 2-D quadrature of the magnetic interaction integrals.

Change of variables used throughout: with mirror separation D,

    x = 2 k_perp D            (exponential axis, weight e^{-x})
    y = omega / (k_perp c)    (frequency fraction, y in [0, 1])

so that dk_perp k_perp domega = (c x^2 / (8 D^3)) dx dy and the frequency
integration limit omega <= k_perp c becomes y <= 1.  The force integrals
carry one more factor k_perp = x/(2D).  In energy units (hbar*c in eV nm,
D in nm) the outer prefactors become

    energy:  hbar_c / (8 pi^2 D^3) * <configuration coefficient>
    force:   hbar_c / (8 pi^2 D^4) * <configuration coefficient>

with the in-plane terms picking up 1/2 and -1/4 relative to the polar one.

A single distance is evaluated sequentially; distinct distances are
independent pure computations and may run concurrently.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Optional

from scipy import integrate

from .dielectric import DielectricResponse
from .quantities import CONST

__all__ = [
    "QuadratureSettings",
    "InteractionResult",
    "QuadratureConvergenceError",
    "quad2d",
    "energy_polar",
    "force_polar",
    "energy_inplane",
    "force_inplane",
    "interaction",
    "sign_change_distance",
]


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances and budgets for the nested adaptive scheme.

    ``x_max`` truncates the exponentially damped axis; e^{-60} ~ 9e-27
    bounds the discarded tail below ``abs_tol`` for any polynomially
    bounded integrand.
    """

    rel_tol: float = 1e-6
    abs_tol: float = 1e-30
    x_max: float = 60.0
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (0 < self.rel_tol <= 1e-2):
            raise ValueError("rel_tol must lie in (0, 1e-2]")
        if self.x_max < 30:
            raise ValueError("x_max must be >= 30")


@dataclass
class InteractionResult:
    """Energy/force per unit area at one distance.

    ``delta_E`` is in eV/nm^2 and ``delta_F`` in eV/nm^3; fields not
    computed by the producing call are None.  For the in-plane
    configuration, e1/f1 is the longitudinal Kerr term (<= 0) and e2/f2
    the transversal one (>= 0), with delta = term1 + term2.
    ``err_estimate`` is relative.
    """

    D: float
    config: str
    delta_E: Optional[float] = None
    delta_F: Optional[float] = None
    e1: Optional[float] = None
    e2: Optional[float] = None
    f1: Optional[float] = None
    f2: Optional[float] = None
    err_estimate: float = 0.0


class QuadratureConvergenceError(RuntimeError):
    """Raised when the subdivision budget is exhausted before convergence."""

    def __init__(self, message, value, err):
        super().__init__(message)
        self.value = value
        self.err = err


def _quad(f, a, b, epsabs, epsrel, limit):
    """scipy QUADPACK call that converts non-convergence into an exception."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, err = integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
    if caught and err > 10.0 * max(epsrel * abs(value), epsabs):
        raise QuadratureConvergenceError(
            f"quadrature failed to converge: value={value:.6e} err={err:.3e}",
            value=value,
            err=err,
        )
    return value, err


def quad2d(f: Callable[[float, float], float],
           settings: Optional[QuadratureSettings] = None) -> tuple[float, float]:
    """Nested adaptive Gauss-Kronrod integral of f over (0, x_max] x [0, 1].

    Returns (value, error estimate).  The inner integral runs at a tenth of
    the outer relative tolerance; its error is folded into the returned
    estimate.  Endpoints are never evaluated (open nodes), so integrands
    may be left undefined at x=0, y=0.
    """
    s = settings or QuadratureSettings()
    inner_limit = min(200, s.max_subdivisions)
    inner_epsabs = s.abs_tol / s.x_max
    inner_errs = []

    def inner(x):
        val, err = _quad(lambda y: f(x, y), 0.0, 1.0,
                         epsabs=inner_epsabs, epsrel=0.1 * s.rel_tol,
                         limit=inner_limit)
        inner_errs.append(err)
        return val

    value, outer_err = _quad(inner, 0.0, s.x_max,
                             epsabs=s.abs_tol, epsrel=s.rel_tol,
                             limit=s.max_subdivisions)
    inner_part = 0.0
    if inner_errs:
        inner_part = s.x_max * sum(inner_errs) / len(inner_errs)
    return value, outer_err + inner_part


def _products(model_a: DielectricResponse, model_b: DielectricResponse,
              omega: float, kc: float, config: str):
    """Pairwise products of the two mirrors' reflection quantities.

    Returns (rss2, rpp2, sp2, dpp2) where each entry is the product of the
    corresponding per-mirror amplitudes; for identical mirrors these reduce
    to the squared coefficients.  sp2/dpp2 carry the sign structure of the
    squared off-diagonal amplitudes (sp2 >= 0 polar, <= 0 in-plane).
    """
    polar = config == "polar"
    ea = model_a.eps_xx(omega)
    xa = math.sqrt(omega * omega * (ea - 1.0) + kc * kc)
    rss_a = (kc - xa) / (kc + xa)
    rpp_a = (ea * kc - xa) / (ea * kc + xa)
    exy_a = model_a.eps_xy(omega)
    if polar:
        amp_a = -kc * omega * exy_a / ((kc + xa) * (ea * kc + xa))
        h_a = 0.0
    else:
        q = math.sqrt(max(kc * kc - omega * omega, 0.0))
        amp_a = -q * omega * exy_a * kc / ((kc + xa) * (ea * kc + xa) * xa)
        h_a = 2.0 * q * exy_a * kc / (ea * kc + xa) ** 2

    if model_b is model_a:
        rss_b, rpp_b, amp_b, h_b = rss_a, rpp_a, amp_a, h_a
    else:
        eb = model_b.eps_xx(omega)
        xb = math.sqrt(omega * omega * (eb - 1.0) + kc * kc)
        rss_b = (kc - xb) / (kc + xb)
        rpp_b = (eb * kc - xb) / (eb * kc + xb)
        exy_b = model_b.eps_xy(omega)
        if polar:
            amp_b = -kc * omega * exy_b / ((kc + xb) * (eb * kc + xb))
            h_b = 0.0
        else:
            q = math.sqrt(max(kc * kc - omega * omega, 0.0))
            amp_b = -q * omega * exy_b * kc / ((kc + xb) * (eb * kc + xb) * xb)
            h_b = 2.0 * q * exy_b * kc / (eb * kc + xb) ** 2

    if polar:
        sp2 = amp_a * amp_b
        dpp2 = 0.0
    else:
        # amplitudes are i*g and i*h; the products pick up a minus sign
        sp2 = -amp_a * amp_b
        dpp2 = -h_a * h_b
    return rss_a * rss_b, rpp_a * rpp_b, sp2, dpp2


def _scaled(settings: QuadratureSettings, prefactor: float) -> QuadratureSettings:
    # abs_tol is stated on the physical result; rescale it for the
    # dimensionless integral behind the prefactor
    return replace(settings, abs_tol=settings.abs_tol / abs(prefactor))


def _make_integrand(model_a, model_b, D, config, kind):
    """Integrand over (x, y) for one of the four integral kinds.

    kind is "energy-sp", "force-sp", "energy-dpp" or "force-dpp".
    """
    half_hbar_c_over_D = CONST.hbar_c / (2.0 * D)

    def f(x, y):
        if x <= 0.0 or y <= 0.0:
            return 0.0
        kc = x * half_hbar_c_over_D
        omega = y * kc
        rss2, rpp2, sp2, dpp2 = _products(model_a, model_b, omega, kc, config)
        ex = math.exp(-x)
        if kind == "energy-sp":
            return x * x * sp2 * ex / ((1.0 - rss2 * ex) * (1.0 - rpp2 * ex))
        if kind == "force-sp":
            den = (1.0 - rss2 * ex) * (1.0 - rpp2 * ex)
            return x ** 3 * sp2 * (1.0 - rss2 * rpp2 * ex * ex) * ex / (den * den)
        if kind == "energy-dpp":
            den = 1.0 - rpp2 * ex
            return x * x * dpp2 * ex / (den * den)
        # force-dpp
        den = 1.0 - rpp2 * ex
        return x ** 3 * dpp2 * (1.0 + rpp2 * ex) * ex / (den ** 3)

    return f


def _integral(model_a, model_b, D, config, kind, prefactor, settings):
    f = _make_integrand(model_a, model_b, D, config, kind)
    value, err = quad2d(f, _scaled(settings, prefactor))
    return prefactor * value, abs(prefactor) * err


def _rel(err_abs: float, value: float) -> float:
    return err_abs / max(abs(value), 1e-300)


def energy_polar(model: DielectricResponse, D: float,
                 settings: Optional[QuadratureSettings] = None,
                 model_b: Optional[DielectricResponse] = None) -> InteractionResult:
    """Polar-configuration interaction energy per unit area (<= 0)."""
    if D <= 0:
        raise ValueError("D must be > 0")
    s = settings or QuadratureSettings()
    b = model_b if model_b is not None else model
    pref = -CONST.hbar_c / (8.0 * math.pi**2 * D**3)
    value, err = _integral(model, b, D, "polar", "energy-sp", pref, s)
    return InteractionResult(D=D, config="polar", delta_E=value,
                             err_estimate=_rel(err, value))


def force_polar(model: DielectricResponse, D: float,
                settings: Optional[QuadratureSettings] = None,
                model_b: Optional[DielectricResponse] = None) -> InteractionResult:
    """Polar-configuration force per unit area (<= 0)."""
    if D <= 0:
        raise ValueError("D must be > 0")
    s = settings or QuadratureSettings()
    b = model_b if model_b is not None else model
    pref = -CONST.hbar_c / (8.0 * math.pi**2 * D**4)
    value, err = _integral(model, b, D, "polar", "force-sp", pref, s)
    return InteractionResult(D=D, config="polar", delta_F=value,
                             err_estimate=_rel(err, value))


def energy_inplane(model: DielectricResponse, D: float,
                   settings: Optional[QuadratureSettings] = None,
                   model_b: Optional[DielectricResponse] = None) -> InteractionResult:
    """In-plane interaction energy: longitudinal + transversal Kerr terms."""
    if D <= 0:
        raise ValueError("D must be > 0")
    s = settings or QuadratureSettings()
    b = model_b if model_b is not None else model
    p1 = CONST.hbar_c / (16.0 * math.pi**2 * D**3)
    p2 = -CONST.hbar_c / (32.0 * math.pi**2 * D**3)
    e1, err1 = _integral(model, b, D, "in-plane", "energy-sp", p1, s)
    e2, err2 = _integral(model, b, D, "in-plane", "energy-dpp", p2, s)
    total = e1 + e2
    return InteractionResult(D=D, config="in-plane", delta_E=total, e1=e1, e2=e2,
                             err_estimate=_rel(err1 + err2, total))


def force_inplane(model: DielectricResponse, D: float,
                  settings: Optional[QuadratureSettings] = None,
                  model_b: Optional[DielectricResponse] = None) -> InteractionResult:
    """In-plane force: longitudinal + transversal Kerr terms."""
    if D <= 0:
        raise ValueError("D must be > 0")
    s = settings or QuadratureSettings()
    b = model_b if model_b is not None else model
    p1 = CONST.hbar_c / (16.0 * math.pi**2 * D**4)
    p2 = -CONST.hbar_c / (32.0 * math.pi**2 * D**4)
    f1, err1 = _integral(model, b, D, "in-plane", "force-sp", p1, s)
    f2, err2 = _integral(model, b, D, "in-plane", "force-dpp", p2, s)
    total = f1 + f2
    return InteractionResult(D=D, config="in-plane", delta_F=total, f1=f1, f2=f2,
                             err_estimate=_rel(err1 + err2, total))


def interaction(model: DielectricResponse, D: float, config: str,
                settings: Optional[QuadratureSettings] = None,
                model_b: Optional[DielectricResponse] = None) -> InteractionResult:
    """Energy and force at one distance, merged into one result."""
    if config == "polar":
        re = energy_polar(model, D, settings, model_b)
        rf = force_polar(model, D, settings, model_b)
    elif config == "in-plane":
        re = energy_inplane(model, D, settings, model_b)
        rf = force_inplane(model, D, settings, model_b)
    else:
        raise ValueError(f"unknown configuration {config!r}")
    return InteractionResult(
        D=D, config=config,
        delta_E=re.delta_E, delta_F=rf.delta_F,
        e1=re.e1, e2=re.e2, f1=rf.f1, f2=rf.f2,
        err_estimate=max(re.err_estimate, rf.err_estimate),
    )


def sign_change_distance(model: DielectricResponse, d_lo: float, d_hi: float,
                         settings: Optional[QuadratureSettings] = None,
                         model_b: Optional[DielectricResponse] = None,
                         samples: int = 25) -> Optional[float]:
    """Distance at which the in-plane force changes sign, or None.

    Scans a log grid over [d_lo, d_hi]; if several sign changes are
    bracketed, warns and refines the smallest.  The root is bisected to 3
    significant figures.
    """
    if not d_lo < d_hi:
        raise ValueError("need d_lo < d_hi")
    s = settings or QuadratureSettings()

    def force(d):
        return force_inplane(model, d, s, model_b).delta_F

    grid = [d_lo * (d_hi / d_lo) ** (i / (samples - 1)) for i in range(samples)]
    vals = [force(d) for d in grid]
    brackets = [
        (grid[i], grid[i + 1])
        for i in range(samples - 1)
        if vals[i] != 0.0 and vals[i + 1] != 0.0 and (vals[i] < 0) != (vals[i + 1] < 0)
    ]
    if not brackets:
        return None
    if len(brackets) > 1:
        warnings.warn(f"{len(brackets)} sign changes bracketed; refining the smallest")
    lo, hi = brackets[0]
    flo = force(lo)
    while (hi - lo) > 5e-4 * (hi + lo):
        mid = math.sqrt(lo * hi)
        fmid = force(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return math.sqrt(lo * hi)
