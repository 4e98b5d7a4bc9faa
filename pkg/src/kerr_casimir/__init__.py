"""Magnetic Casimir interaction between magnetized mirrors.

Numerical Lifshitz-type quadrature of the magnetization-dependent part of
the Casimir energy and force between two mirrors, for magnetization
perpendicular (polar) or parallel (in-plane) to the surfaces, together
with closed-form asymptotic predictions, ingestion of tabulated optical
data via causality transforms, and a plate-lens conversion.
"""

from .asymptotics import (
    AsymptoticPrediction,
    drude_predict,
    drude_regime,
    fit_power_law,
    hybrid_predict,
    hybrid_regime,
    series_s,
)
from .dielectric import (
    DRUDE_DEFAULTS,
    HYBRID_DEFAULTS,
    DielectricResponse,
    DrudeModel,
    DrudeParams,
    HybridModel,
    HybridParams,
    ReversedMagnetization,
    default_drude_model,
    default_hybrid_model,
)
from .geometry import LensGeometry, PlateLensForce, plate_lens_force
from .lifshitz import (
    InteractionResult,
    QuadratureConvergenceError,
    QuadratureSettings,
    energy_inplane,
    energy_polar,
    force_inplane,
    force_polar,
    interaction,
    quad2d,
    sign_change_distance,
)
from .optical_data import (
    DrudeTail,
    OpticalTable,
    TableParseError,
    TabulatedMaterial,
    build_cache,
    kk_xx_imag_axis,
    kk_xy_imag_axis,
    load_table,
)
from .quantities import CONST, Distance, EnergyPerArea, ForcePerArea

__all__ = [
    "AsymptoticPrediction",
    "CONST",
    "DRUDE_DEFAULTS",
    "HYBRID_DEFAULTS",
    "DielectricResponse",
    "Distance",
    "DrudeModel",
    "DrudeParams",
    "DrudeTail",
    "EnergyPerArea",
    "ForcePerArea",
    "HybridModel",
    "HybridParams",
    "InteractionResult",
    "LensGeometry",
    "OpticalTable",
    "PlateLensForce",
    "QuadratureConvergenceError",
    "QuadratureSettings",
    "ReversedMagnetization",
    "TableParseError",
    "TabulatedMaterial",
    "build_cache",
    "default_drude_model",
    "default_hybrid_model",
    "drude_predict",
    "drude_regime",
    "energy_inplane",
    "energy_polar",
    "fit_power_law",
    "force_inplane",
    "force_polar",
    "hybrid_predict",
    "hybrid_regime",
    "interaction",
    "kk_xx_imag_axis",
    "kk_xy_imag_axis",
    "load_table",
    "plate_lens_force",
    "quad2d",
    "series_s",
    "sign_change_distance",
]
