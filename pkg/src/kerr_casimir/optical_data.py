"""Tabulated optical data and its transform to the imaginary axis.

Input files are two-column whitespace text (omega in eV, dimensionless
value), '#' comments allowed.  Two kinds of tables exist: the imaginary
part of eps_xx on the real axis (positive, absorptive) and the real part
of eps_xy.  The causality transforms

    eps_xx(i w) = 1 + (2/pi) Int dw' w'   Im eps_xx(w') / (w'^2 + w^2)
    eps_xy(i w) =     (2/(pi w)) Int dw' w'^2 Re eps_xy(w') / (w'^2 + w^2)

are evaluated segment by segment on the table's power-law interpolation
(log-log linear), which keeps the smooth kernel local to each segment.
Below the lowest datum the xx integrand uses an analytic Drude tail,
integrated in closed form; above the highest datum the last power-law
segment is continued.  The xy integration is truncated to the table's
support by default (a deliberately rough but conventional choice); a
power-law continuation can be enabled instead.

Lifshitz quadrature never calls the transforms directly: a log-spaced
imaginary-axis cache with monotone log-log interpolation is built once.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Optional, TextIO

import numpy as np
from scipy import integrate
from scipy.interpolate import PchipInterpolator

KIND_IM_XX = "im-eps-xx"
KIND_RE_XY = "re-eps-xy"

CACHE_OMEGA_MIN = 1e-5  # eV
CACHE_OMEGA_MAX = 1e4  # eV

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)


class TableParseError(ValueError):
    pass


@dataclass(frozen=True)
class OpticalTable:
    """Tabulated real-frequency data, strictly increasing in omega."""

    kind: str
    omegas: np.ndarray
    values: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        if self.kind not in (KIND_IM_XX, KIND_RE_XY):
            raise ValueError(f"unknown table kind {self.kind!r}")
        if len(self.omegas) < 2:
            raise ValueError("table needs at least 2 points")
        if np.any(self.omegas <= 0):
            raise ValueError("table omegas must be > 0")
        if np.any(np.diff(self.omegas) <= 0):
            raise ValueError("table omegas must be strictly increasing")
        if self.kind == KIND_IM_XX and np.any(self.values <= 0):
            raise ValueError("Im eps_xx must be > 0 (absorptive medium)")


@dataclass(frozen=True)
class DrudeTail:
    """Low-frequency Drude extrapolation of the loss data, eV units."""

    omega_p: float
    inv_tau: float

    def __post_init__(self):
        if self.omega_p < 0 or self.inv_tau <= 0:
            raise ValueError("need omega_p >= 0 and inv_tau > 0")

    def im_eps(self, omega):
        """Im eps_xx(omega) of the Drude model on the real axis."""
        return self.omega_p**2 * self.inv_tau / (omega * (omega**2 + self.inv_tau**2))


def load_table(stream: TextIO, kind: str, source_label: str = "") -> OpticalTable:
    """Parse a two-column text table; rows are sorted, duplicates rejected."""
    rows = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TableParseError(f"line {lineno}: expected 2 columns, got {len(parts)}")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise TableParseError(f"line {lineno}: {exc}") from None
    rows.sort(key=lambda r: r[0])
    omegas = np.array([r[0] for r in rows])
    if len(omegas) >= 2 and np.any(np.diff(omegas) == 0):
        dup = omegas[np.flatnonzero(np.diff(omegas) == 0)[0]]
        raise TableParseError(f"duplicate abscissa omega = {dup:g}")
    return OpticalTable(kind=kind, omegas=omegas,
                        values=np.array([r[1] for r in rows]),
                        source_label=source_label)


class _LogLogCurve:
    """Monotone interpolation of a cached imaginary-axis curve.

    Positive curves are interpolated shape-preservingly in log-log space
    (all-negative ones via their absolute value); curves containing zeros
    or sign changes fall back to linear-in-value over log-omega.  Queries
    above the grid follow the final power-law slope; queries below clamp
    to the lowest node with a warning.
    """

    def __init__(self, omegas: np.ndarray, values: np.ndarray):
        self._logw = np.log(omegas)
        self._lo = omegas[0]
        self._hi = omegas[-1]
        if np.all(values > 0):
            self._sign = 1.0
        elif np.all(values < 0):
            self._sign = -1.0
        else:
            self._sign = 0.0
        if self._sign != 0.0:
            y = np.log(np.abs(values))
        else:
            y = values
        self._interp = PchipInterpolator(self._logw, y, extrapolate=False)
        self._y_lo = y[0]
        self._y_hi = y[-1]
        self._slope_hi = (y[-1] - y[-2]) / (self._logw[-1] - self._logw[-2])

    def __call__(self, omega):
        omega = np.asarray(omega, dtype=float)
        scalar = omega.ndim == 0
        w = np.atleast_1d(omega)
        if np.any(w < self._lo):
            warnings.warn(
                f"query below cached range ({self._lo:g} eV); clamping", stacklevel=2
            )
        t = np.log(np.clip(w, self._lo, None))
        y = np.where(
            t > np.log(self._hi),
            self._y_hi + self._slope_hi * (t - np.log(self._hi)),
            self._interp(np.clip(t, None, np.log(self._hi))),
        )
        out = self._sign * np.exp(y) if self._sign != 0.0 else y
        return float(out[0]) if scalar else out


@dataclass(frozen=True)
class ImagAxisCache:
    omegas: np.ndarray
    eps_xx: np.ndarray
    eps_xy: np.ndarray
    xx_interp: _LogLogCurve
    xy_interp: Optional[_LogLogCurve]


@dataclass(frozen=True)
class TabulatedMaterial:
    """Material defined by measured optical tables.

    Implements the dielectric-response interface; once a cache is built
    (see :func:`build_cache`), evaluations interpolate it instead of
    re-running the causality integrals.
    """

    table_xx: OpticalTable
    tail_xx: DrudeTail
    table_xy: OpticalTable
    xy_tail: str = "truncate"  # or "power-law"
    cache: Optional[ImagAxisCache] = None

    def __post_init__(self):
        if self.table_xx.kind != KIND_IM_XX:
            raise ValueError("table_xx must be of kind im-eps-xx")
        if self.table_xy.kind != KIND_RE_XY:
            raise ValueError("table_xy must be of kind re-eps-xy")
        if self.xy_tail not in ("truncate", "power-law"):
            raise ValueError(f"unknown xy_tail policy {self.xy_tail!r}")

    def eps_xx(self, omega):
        if self.cache is not None:
            return self.cache.xx_interp(omega)
        return kk_xx_imag_axis(self, omega)

    def eps_xy(self, omega):
        if self.cache is not None:
            if self.cache.xy_interp is None:
                arr = np.asarray(omega, dtype=float)
                return 0.0 if arr.ndim == 0 else np.zeros_like(arr)
            return self.cache.xy_interp(omega)
        return kk_xy_imag_axis(self, omega)


def _segment_sum(table: OpticalTable, omega: float, moment: int,
                 upper_cutoff: Optional[float] = None) -> float:
    """Int over the table's support of w'^moment * v(w') / (w'^2 + omega^2).

    Power-law interpolation per segment where the endpoint values share a
    sign, linear interpolation otherwise; fixed Gauss-Legendre in log w'
    per segment (segments are short on the log axis, the kernel varies on
    the scale of omega, so low-order nodes are exact to rounding).
    """
    w = table.omegas
    v = table.values
    if upper_cutoff is not None:
        keep = w <= upper_cutoff
        if keep.sum() < 2:
            return 0.0
        w = w[keep]
        v = v[keep]
    w1, w2 = w[:-1], w[1:]
    v1, v2 = v[:-1], v[1:]
    t1, t2 = np.log(w1), np.log(w2)
    half = 0.5 * (t2 - t1)
    tn = 0.5 * (t1 + t2)[:, None] + half[:, None] * _GL_NODES[None, :]
    wn = np.exp(tn)

    powerlaw = (v1 * v2) > 0
    vn = np.empty_like(wn)
    if np.any(powerlaw):
        b = np.zeros_like(w1)
        b[powerlaw] = np.log(np.abs(v2[powerlaw] / v1[powerlaw])) / (
            t2[powerlaw] - t1[powerlaw]
        )
        vn[powerlaw] = v1[powerlaw, None] * (
            wn[powerlaw] / w1[powerlaw, None]
        ) ** b[powerlaw, None]
    lin = ~powerlaw
    if np.any(lin):
        slope = (v2[lin] - v1[lin]) / (w2[lin] - w1[lin])
        vn[lin] = v1[lin, None] + slope[:, None] * (wn[lin] - w1[lin, None])

    # dw' = w' dt: one extra power of w'
    integrand = wn ** (moment + 1) * vn / (wn**2 + omega**2)
    return float(np.sum(half[:, None] * _GL_WEIGHTS[None, :] * integrand))


def _xx_low_tail(tail: DrudeTail, w1: float, omega: float) -> float:
    """Closed form of Int_0^w1 w' ImepsDrude(w') / (w'^2 + omega^2) dw'."""
    if tail.omega_p == 0.0:
        return 0.0
    a = tail.inv_tau
    c = tail.omega_p**2 * tail.inv_tau
    if abs(omega - a) > 1e-9 * a:
        return c / (omega**2 - a**2) * (
            math.atan(w1 / a) / a - math.atan(w1 / omega) / omega
        )
    # degenerate omega == inv_tau: Int dw'/(w'^2+a^2)^2
    return c * (w1 / (2 * a**2 * (w1**2 + a**2)) + math.atan(w1 / a) / (2 * a**3))


def _power_tail(table: OpticalTable, omega: float, moment: int,
                upper: float) -> float:
    """Continue the last log-log segment beyond the table as a power law."""
    w = table.omegas
    v = table.values
    if v[-1] == 0.0 or v[-1] * v[-2] <= 0:
        return 0.0
    b = math.log(abs(v[-1] / v[-2])) / math.log(w[-1] / w[-2])
    if b >= 0:
        warnings.warn("last segment does not decay; skipping high-frequency tail")
        return 0.0
    wN, vN = w[-1], v[-1]

    def f(wp):
        return wp**moment * vN * (wp / wN) ** b / (wp**2 + omega**2)

    val, _ = integrate.quad(f, wN, upper, epsabs=0.0, epsrel=1e-10, limit=200)
    return val


def kk_xx_imag_axis(m: TabulatedMaterial, omega: float,
                    tail_cutoff: float = math.inf) -> float:
    """eps_xx at imaginary frequency from the loss table, >= 1."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    core = _segment_sum(m.table_xx, omega, moment=1)
    low = _xx_low_tail(m.tail_xx, m.table_xx.omegas[0], omega)
    high = _power_tail(m.table_xx, omega, moment=1, upper=tail_cutoff)
    return 1.0 + (2.0 / math.pi) * (core + low + high)


def kk_xy_imag_axis(m: TabulatedMaterial, omega: float) -> float:
    """eps_xy at imaginary frequency from the Re eps_xy table."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    core = _segment_sum(m.table_xy, omega, moment=2)
    if m.xy_tail == "power-law":
        core += _power_tail(m.table_xy, omega, moment=2, upper=math.inf)
    return (2.0 / (math.pi * omega)) * core


def build_cache(m: TabulatedMaterial, points_per_decade: int = 32) -> TabulatedMaterial:
    """Precompute the imaginary-axis response on a log grid.

    The grid spans [1e-5, 1e4] eV; later queries interpolate it
    shape-preservingly in log-log space.
    """
    if points_per_decade < 8:
        raise ValueError("points_per_decade must be >= 8")
    decades = math.log10(CACHE_OMEGA_MAX / CACHE_OMEGA_MIN)
    n = int(round(decades * points_per_decade)) + 1
    omegas = np.geomspace(CACHE_OMEGA_MIN, CACHE_OMEGA_MAX, n)
    exx = np.array([kk_xx_imag_axis(m, w) for w in omegas])
    exy = np.array([kk_xy_imag_axis(m, w) for w in omegas])

    # interpolate eps_xx - 1 (positive, smooth in log-log); eps_xx >= 1
    # is then automatic
    if np.all(exx - 1.0 > 0):
        xx_interp = _ShiftedCurve(_LogLogCurve(omegas, exx - 1.0))
    else:
        xx_interp = _LogLogCurve(omegas, exx)
    xy_interp = None if np.all(exy == 0.0) else _LogLogCurve(omegas, exy)
    cache = ImagAxisCache(omegas=omegas, eps_xx=exx, eps_xy=exy,
                          xx_interp=xx_interp, xy_interp=xy_interp)
    return replace(m, cache=cache)


class _ShiftedCurve:
    """Adds 1 back onto an interpolated eps_xx - 1 curve."""

    def __init__(self, curve: _LogLogCurve):
        self._curve = curve

    def __call__(self, omega):
        return self._curve(omega) + 1.0
