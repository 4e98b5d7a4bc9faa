"""Plate-lens conversion via the proximity force theorem.

The plate-plate energy per unit area E(D) converts to a plate-lens force
F = 2 pi R E(D), with R the curvature radius of the lens.  The result is
a force (femtonewtons), deliberately a distinct type from the plate-plate
force per unit area so the two cannot be mixed up.  No curvature
corrections are applied; treat outputs as carrying a ~10% systematic.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .quantities import EV_PER_NM_TO_FEMTONEWTON, EnergyPerArea


@dataclass(frozen=True)
class LensGeometry:
    """Curvature radius of the lens-shaped mirror, in micrometers."""

    radius_um: float

    def __post_init__(self):
        if self.radius_um <= 0:
            raise ValueError("lens radius must be > 0")


@dataclass(frozen=True)
class PlateLensForce:
    """A force (not per area), in femtonewtons."""

    femtonewtons: float


def plate_lens_force(g: LensGeometry, energy_per_area: EnergyPerArea,
                     distance_nm: float | None = None) -> PlateLensForce:
    """F = 2 pi R E(D), sign preserved, converted to fN.

    Pass the distance to get a warning when D/R exceeds 1%, where the
    proximity approximation starts to degrade.
    """
    radius_nm = g.radius_um * 1.0e3
    if distance_nm is not None and distance_nm / radius_nm > 0.01:
        warnings.warn(
            f"D/R = {distance_nm / radius_nm:.3g} > 0.01; proximity "
            "approximation is unreliable here"
        )
    force_ev_per_nm = 2.0 * math.pi * radius_nm * energy_per_area.value
    return PlateLensForce(force_ev_per_nm * EV_PER_NM_TO_FEMTONEWTON)
