"""Unit conventions, physical constants and SI conversions.

Internal unit system: every frequency is carried as the photon energy
``hbar*omega`` in eV and every length in nm.  Energies per unit area are
then eV/nm^2, forces per unit area eV/nm^3, and every formula reduces to
dimensionless ratios of energies, which keeps all intermediate magnitudes
close to unity.  Relaxation times are represented by the energy
``hbar/tau`` (the default example value 6.58 meV corresponds to
tau ~ 1e-13 s).

Conversion chain (documented once, here):
    1 eV/nm^2 = 1.602176634e-19 J / 1e-18 m^2 = 0.1602176634 J/m^2
    1 eV/nm^3 = 1.602176634e-19 J / 1e-27 m^3 = 1.602176634e8 Pa
    1 Pa      = 1e3 mN/m^2
    1 eV/nm   = 1.602176634e-19 J / 1e-9 m    = 1.602176634e5 fN
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """The few constants this package needs, in internal units."""

    hbar_c: float = 197.3269804  # eV nm (CODATA)
    ev_per_nm2_to_joule_per_m2: float = 0.1602176634
    ev_per_nm3_to_pascal: float = 1.602176634e8
    zeta3: float = 1.2020569031595943
    zeta4: float = 1.0823232337111382


CONST = PhysicalConstants()

PASCAL_TO_MILLINEWTON_PER_M2 = 1.0e3
EV_PER_NM_TO_FEMTONEWTON = 1.602176634e5


def to_si_energy_per_area(e: float) -> float:
    """eV/nm^2 -> J/m^2."""
    return e * CONST.ev_per_nm2_to_joule_per_m2


def to_si_force_per_area(f: float) -> float:
    """eV/nm^3 -> mN/m^2."""
    return f * CONST.ev_per_nm3_to_pascal * PASCAL_TO_MILLINEWTON_PER_M2


def from_si_energy_per_area(e_si: float) -> float:
    """J/m^2 -> eV/nm^2."""
    return e_si / CONST.ev_per_nm2_to_joule_per_m2


def from_si_force_per_area(f_si: float) -> float:
    """mN/m^2 -> eV/nm^3."""
    return f_si / (CONST.ev_per_nm3_to_pascal * PASCAL_TO_MILLINEWTON_PER_M2)


@dataclass(frozen=True)
class Distance:
    """Mirror separation in nm, strictly positive."""

    value: float

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError(f"distance must be > 0, got {self.value}")


@dataclass(frozen=True)
class EnergyPerArea:
    """Interaction energy per unit area, internal units eV/nm^2."""

    value: float

    @property
    def si(self) -> float:
        """J/m^2."""
        return to_si_energy_per_area(self.value)


@dataclass(frozen=True)
class ForcePerArea:
    """Interaction force per unit area, internal units eV/nm^3."""

    value: float

    @property
    def si(self) -> float:
        """mN/m^2."""
        return to_si_force_per_area(self.value)
