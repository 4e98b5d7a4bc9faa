import math

import pytest

from kerr_casimir.geometry import LensGeometry, PlateLensForce, plate_lens_force
from kerr_casimir.quantities import EV_PER_NM_TO_FEMTONEWTON, EnergyPerArea


def test_radius_validation():
    LensGeometry(radius_um=100.0)
    with pytest.raises(ValueError):
        LensGeometry(radius_um=0.0)
    with pytest.raises(ValueError):
        LensGeometry(radius_um=-1.0)


def test_zero_energy_zero_force():
    g = LensGeometry(radius_um=100.0)
    assert plate_lens_force(g, EnergyPerArea(0.0)).femtonewtons == 0.0


def test_linearity_in_radius():
    e = EnergyPerArea(-2.5e-13)
    f1 = plate_lens_force(LensGeometry(50.0), e).femtonewtons
    f2 = plate_lens_force(LensGeometry(100.0), e).femtonewtons
    assert f2 == pytest.approx(2.0 * f1, rel=1e-12)


def test_sign_preserved():
    g = LensGeometry(radius_um=10.0)
    assert plate_lens_force(g, EnergyPerArea(-1e-12)).femtonewtons < 0
    assert plate_lens_force(g, EnergyPerArea(+1e-12)).femtonewtons > 0


def test_hand_computed_conversion():
    # R = 1 um = 1000 nm, E = 1 eV/nm^2: F = 2 pi 1000 eV/nm -> fN
    got = plate_lens_force(LensGeometry(1.0), EnergyPerArea(1.0)).femtonewtons
    assert got == pytest.approx(2 * math.pi * 1000.0 * EV_PER_NM_TO_FEMTONEWTON,
                                rel=1e-12)


def test_proximity_validity_warning():
    g = LensGeometry(radius_um=1.0)  # 1000 nm
    with pytest.warns(UserWarning, match="proximity"):
        plate_lens_force(g, EnergyPerArea(1e-12), distance_nm=50.0)
    # close separation is silent
    plate_lens_force(g, EnergyPerArea(1e-12), distance_nm=5.0)


def test_result_type_distinct_from_per_area():
    out = plate_lens_force(LensGeometry(1.0), EnergyPerArea(1.0))
    assert isinstance(out, PlateLensForce)
    assert not hasattr(out, "si")  # not a per-area quantity
