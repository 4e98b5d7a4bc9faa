import io

import numpy as np
import pytest

from kerr_casimir import datasets as ds
from kerr_casimir.optical_data import KIND_IM_XX, KIND_RE_XY, load_table


def test_drude_loss_matches_formula():
    t = ds.drude_loss_table(9.85, 6.58e-3)
    w = t.omegas
    want = 9.85**2 * 6.58e-3 / (w * (w**2 + 6.58e-3**2))
    np.testing.assert_allclose(t.values, want, rtol=1e-12)
    assert t.kind == KIND_IM_XX


def test_lorentzian_area_normalization():
    t = ds.lorentzian_kerr_table(1.6, 0.1, 0.05)
    area = np.trapezoid(t.values, t.omegas)
    assert area == pytest.approx(1.6 * 0.1, rel=2e-2)
    assert t.kind == KIND_RE_XY


def test_fe_like_loss_is_drude_then_power_law():
    t = ds.fe_like_loss_table()
    w = t.omegas
    low = w <= ds.FE_INTERBAND_ONSET
    drude = ds.FE_OMEGA_P**2 * ds.FE_INV_TAU / (w[low] * (w[low] ** 2
                                                          + ds.FE_INV_TAU**2))
    np.testing.assert_allclose(t.values[low], drude, rtol=1e-12)
    hi = w >= 10.0
    slope = np.diff(np.log(t.values[hi])) / np.diff(np.log(w[hi]))
    np.testing.assert_allclose(slope, -1.5, atol=1e-9)


def test_write_and_reload_round_trip(tmp_path):
    t = ds.fe_like_kerr_table()
    path = tmp_path / "xy.dat"
    ds.write_table(t, str(path))
    with open(path) as fh:
        back = load_table(fh, KIND_RE_XY)
    np.testing.assert_allclose(back.omegas, t.omegas, rtol=1e-8)
    np.testing.assert_allclose(back.values, t.values, rtol=1e-8)


def test_table_to_text_parses_back():
    t = ds.drude_loss_table(3.5, 0.019, w_min=1e-2, w_max=1e2,
                            points_per_decade=10)
    back = load_table(io.StringIO(ds.table_to_text(t)), KIND_IM_XX)
    np.testing.assert_allclose(back.values, t.values, rtol=1e-8)


def test_fe_like_material_builds_with_cache(fe_material):
    assert fe_material.cache is not None
    # qualitative shape: strong diagonal response, small off-diagonal
    assert fe_material.eps_xx(0.1) > 100.0
    assert 0.0 < fe_material.eps_xy(1.0) < fe_material.eps_xx(1.0)
