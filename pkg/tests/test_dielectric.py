import math

import numpy as np
import pytest

from kerr_casimir import dielectric as dl


def test_drude_eps_xx_hand_value():
    p = dl.DrudeParams(omega_p=9.85, omega_c=5.9e-3, inv_tau=6.58e-3)
    # 1 + 9.85^2 / (1.0 * (1.0 + 0.00658))
    assert dl.drude_eps_xx(1.0, p) == pytest.approx(1.0 + 97.0225 / 1.00658, rel=1e-12)


def test_drude_eps_xy_hand_value():
    p = dl.DrudeParams(omega_p=9.85, omega_c=5.9e-3, inv_tau=6.58e-3)
    want = 97.0225 * 5.9e-3 / (0.5 * (0.5 + 6.58e-3) ** 2)
    assert dl.drude_eps_xy(0.5, p) == pytest.approx(want, rel=1e-12)


def test_drude_eps_xx_monotone_decreasing_above_one():
    p = dl.DRUDE_DEFAULTS
    w = np.geomspace(1e-4, 1e3, 200)
    e = dl.drude_eps_xx(w, p)
    assert np.all(e > 1.0)
    assert np.all(np.diff(e) < 0)


def test_plasma_and_hybrid_hand_values():
    p = dl.HybridParams(omega_p=9.85, omega_0=3.9, eps_xy_eff=1.5e-2)
    assert dl.plasma_eps_xx(2.0, p) == pytest.approx(1.0 + 97.0225 / 4.0, rel=1e-12)
    want = (2.0 / math.pi) * 3.9**3 * 1.5e-2 / (2.0 * (3.9**2 + 4.0))
    assert dl.hybrid_eps_xy(2.0, p) == pytest.approx(want, rel=1e-12)


def test_omega_star_default_is_2e_omega_p():
    p = dl.HybridParams(omega_p=9.85, omega_0=3.9, eps_xy_eff=1.5e-2)
    assert p.omega_star == pytest.approx(2.0 * math.e * 9.85, rel=1e-12)
    explicit = dl.HybridParams(omega_p=9.85, omega_0=3.9, eps_xy_eff=1.5e-2,
                               omega_star=30.0)
    assert explicit.omega_star == 30.0


def test_omega_must_be_positive():
    p = dl.DRUDE_DEFAULTS
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            dl.drude_eps_xx(bad, p)
        with pytest.raises(ValueError):
            dl.drude_eps_xy(bad, p)
    with pytest.raises(ValueError):
        dl.plasma_eps_xx(np.array([1.0, 0.0]), dl.HYBRID_DEFAULTS)


def test_param_validation():
    with pytest.raises(ValueError):
        dl.DrudeParams(omega_p=0.0, omega_c=1e-3, inv_tau=1e-3)
    with pytest.raises(ValueError):
        dl.DrudeParams(omega_p=1.0, omega_c=1e-3, inv_tau=0.0)
    with pytest.raises(ValueError):
        dl.HybridParams(omega_p=0.0, omega_0=1.0, eps_xy_eff=0.1)
    with pytest.raises(ValueError):
        dl.HybridParams(omega_p=1.0, omega_0=1.0, eps_xy_eff=0.1, omega_star=-1.0)


def test_unusual_ordering_warns_but_constructs():
    with pytest.warns(UserWarning):
        p = dl.DrudeParams(omega_p=1.0, omega_c=0.5, inv_tau=0.1)
    assert p.omega_c == 0.5


def test_negative_omega_c_flips_eps_xy_sign():
    import warnings
    p_plus = dl.DRUDE_DEFAULTS
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        p_minus = dl.DrudeParams(omega_p=9.85, omega_c=-5.9e-3, inv_tau=6.58e-3)
    assert dl.drude_eps_xy(1.0, p_minus) == -dl.drude_eps_xy(1.0, p_plus)
    assert dl.drude_eps_xx(1.0, p_minus) == dl.drude_eps_xx(1.0, p_plus)


def test_reversed_magnetization_wrapper():
    m = dl.default_drude_model()
    r = dl.ReversedMagnetization(m)
    assert r.eps_xx(0.7) == m.eps_xx(0.7)
    assert r.eps_xy(0.7) == -m.eps_xy(0.7)


def test_models_satisfy_protocol():
    assert isinstance(dl.default_drude_model(), dl.DielectricResponse)
    assert isinstance(dl.default_hybrid_model(), dl.DielectricResponse)


def test_array_evaluation_matches_scalars():
    m = dl.default_hybrid_model()
    w = np.array([0.1, 1.0, 10.0])
    np.testing.assert_allclose(m.eps_xy(w), [m.eps_xy(x) for x in w], rtol=1e-14)
