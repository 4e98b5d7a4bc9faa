"""Synthetic optical tables for tests, demos and the ingestion pipeline.

Real handbook data for Fe is licensed and not shipped.  These generators
produce tables in the same two-column format with controlled analytic
content: a Drude loss curve (whose causality transform has a closed
form), a narrow Lorentzian Kerr line (whose delta-line limit has a closed
form), and an Fe-like composite that mimics the qualitative shape of the
handbook data (Drude response at low frequency rolling over into a slower
interband-like omega^-3/2 decay).
"""

from __future__ import annotations

import io

import numpy as np

from .optical_data import (
    KIND_IM_XX,
    KIND_RE_XY,
    DrudeTail,
    OpticalTable,
    TabulatedMaterial,
    build_cache,
)

FE_OMEGA_P = 3.5  # eV, low-frequency Drude extrapolation
FE_INV_TAU = 0.019  # eV
FE_INTERBAND_ONSET = 0.03  # eV, where the omega^-3/2 decay takes over
FE_XY_CENTER = 1.6  # eV
FE_XY_WIDTH = 0.5  # eV
FE_XY_STRENGTH = 1.4  # effective off-diagonal oscillator strength


def drude_loss_table(omega_p: float, inv_tau: float,
                     w_min: float = 1e-6, w_max: float = 1e6,
                     points_per_decade: int = 40) -> OpticalTable:
    """Im eps_xx of a Drude metal, sampled on a log grid."""
    n = int(round(np.log10(w_max / w_min) * points_per_decade)) + 1
    w = np.geomspace(w_min, w_max, n)
    v = omega_p**2 * inv_tau / (w * (w**2 + inv_tau**2))
    return OpticalTable(kind=KIND_IM_XX, omegas=w, values=v,
                        source_label="synthetic Drude loss")


def lorentzian_kerr_table(omega_0: float, eps_xy_eff: float, width: float,
                          w_min: float | None = None,
                          w_max: float | None = None,
                          n_points: int = 4001) -> OpticalTable:
    """Re eps_xy as a narrow Lorentzian line of area omega_0 * eps_xy_eff.

    In the limit width -> 0 this is a single absorption line and its
    causality transform approaches the closed-form hybrid expression.
    """
    if w_min is None:
        w_min = max(omega_0 - 50.0 * width, omega_0 / 100.0)
    if w_max is None:
        w_max = omega_0 + 50.0 * width
    w = np.linspace(w_min, w_max, n_points)
    area = omega_0 * eps_xy_eff
    v = (area / np.pi) * (width / 2.0) / ((w - omega_0) ** 2 + (width / 2.0) ** 2)
    return OpticalTable(kind=KIND_RE_XY, omegas=w, values=v,
                        source_label="synthetic Lorentzian Kerr line")


def fe_like_loss_table(w_min: float = 0.004, w_max: float = 1e4,
                       points_per_decade: int = 40) -> OpticalTable:
    """Fe-like Im eps_xx: Drude at low frequency, omega^-3/2 above.

    The power-law branch makes eps_xx(i w) - 1 decay roughly as w^-3/2
    over the optical range, which a pure Drude model cannot reproduce.
    """
    n = int(round(np.log10(w_max / w_min) * points_per_decade)) + 1
    w = np.geomspace(w_min, w_max, n)
    drude = FE_OMEGA_P**2 * FE_INV_TAU / (w * (w**2 + FE_INV_TAU**2))
    knee = FE_OMEGA_P**2 * FE_INV_TAU / (
        FE_INTERBAND_ONSET * (FE_INTERBAND_ONSET**2 + FE_INV_TAU**2)
    )
    interband = knee * (w / FE_INTERBAND_ONSET) ** -1.5
    v = np.where(w <= FE_INTERBAND_ONSET, drude, interband)
    return OpticalTable(kind=KIND_IM_XX, omegas=w, values=v,
                        source_label="synthetic Fe-like loss")


def fe_like_kerr_table() -> OpticalTable:
    """Fe-like Re eps_xy: one broad interband line on [0.1, 6] eV."""
    w = np.linspace(0.1, 6.0, 1201)
    area = FE_XY_CENTER * FE_XY_STRENGTH
    half = FE_XY_WIDTH / 2.0
    v = (area / np.pi) * half / ((w - FE_XY_CENTER) ** 2 + half**2)
    return OpticalTable(kind=KIND_RE_XY, omegas=w, values=v,
                        source_label="synthetic Fe-like Kerr line")


def fe_like_material(points_per_decade: int = 24,
                     with_cache: bool = True) -> TabulatedMaterial:
    """The full Fe-like ingestion demo material."""
    m = TabulatedMaterial(
        table_xx=fe_like_loss_table(),
        tail_xx=DrudeTail(omega_p=FE_OMEGA_P, inv_tau=FE_INV_TAU),
        table_xy=fe_like_kerr_table(),
    )
    if with_cache:
        m = build_cache(m, points_per_decade=points_per_decade)
    return m


def write_table(table: OpticalTable, path: str) -> None:
    """Write a table in the two-column text format the loader reads."""
    with open(path, "w") as fh:
        fh.write(f"# {table.source_label}\n# omega_eV value\n")
        for w, v in zip(table.omegas, table.values):
            fh.write(f"{w:.9e} {v:.9e}\n")


def table_to_text(table: OpticalTable) -> str:
    buf = io.StringIO()
    buf.write(f"# {table.source_label}\n")
    for w, v in zip(table.omegas, table.values):
        buf.write(f"{w:.9e} {v:.9e}\n")
    return buf.getvalue()
