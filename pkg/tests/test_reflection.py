import math

import numpy as np
import pytest

from kerr_casimir import reflection as rf
from kerr_casimir.dielectric import (
    DRUDE_DEFAULTS,
    HYBRID_DEFAULTS,
    default_drude_model,
    drude_eps_xx,
    drude_eps_xy,
    hybrid_eps_xy,
)


class _Vacuum:
    def eps_xx(self, omega):
        return 1.0

    def eps_xy(self, omega):
        return 0.0


def test_kpoint_validation():
    rf.KPoint(omega=0.5, kc=1.0)
    rf.KPoint(omega=1.0, kc=1.0)
    for bad in [(0.0, 1.0), (1.5, 1.0), (-0.1, 1.0)]:
        with pytest.raises(ValueError):
            rf.KPoint(omega=bad[0], kc=bad[1])


def test_vacuum_mirror_does_not_reflect():
    co = rf.coefficients(_Vacuum(), rf.KPoint(0.3, 1.0), "polar")
    assert co.r_ss == 0.0
    assert co.r_pp == 0.0
    assert co.rsp2 == 0.0
    assert co.xi == pytest.approx(1.0)


def test_perfect_mirror_limit():
    # enormous eps_xx drives r_ss -> -1 and r_pp -> +1
    r_ss, r_pp = rf.fresnel(0.5, 1.0, 1e12)
    assert r_ss == pytest.approx(-1.0, abs=1e-5)
    assert r_pp == pytest.approx(1.0, abs=1e-5)


def test_diagonal_amplitude_ranges():
    p = DRUDE_DEFAULTS
    for kc in np.geomspace(1e-3, 1e2, 20):
        for y in (0.1, 0.5, 1.0):
            w = y * kc
            e = drude_eps_xx(w, p)
            r_ss, r_pp = rf.fresnel(w, kc, e)
            assert -1.0 <= r_ss <= 0.0
            assert 0.0 <= r_pp <= 1.0


def test_xi_rejects_eps_below_one():
    with pytest.raises(ValueError):
        rf.xi(1.0, 1.0, 0.5)


def test_polar_amplitude_odd_in_eps_xy_square_even():
    w, kc = 0.3, 0.9
    e = drude_eps_xx(w, DRUDE_DEFAULTS)
    exy = drude_eps_xy(w, DRUDE_DEFAULTS)
    a_plus = rf.polar_kerr_amplitude(w, kc, e, exy)
    a_minus = rf.polar_kerr_amplitude(w, kc, e, -exy)
    assert a_minus == -a_plus
    assert rf.rsp2_polar(w, kc, e, exy) == rf.rsp2_polar(w, kc, e, -exy)
    assert rf.rsp2_polar(w, kc, e, exy) >= 0.0


def test_inplane_squares_are_nonpositive():
    w, kc = 0.3, 0.9
    e = drude_eps_xx(w, DRUDE_DEFAULTS)
    exy = drude_eps_xy(w, DRUDE_DEFAULTS)
    assert rf.rsp2_inplane(w, kc, e, exy) <= 0.0
    assert rf.drpp2_inplane(w, kc, e, exy) <= 0.0
    # and both are even under magnetization reversal
    assert rf.rsp2_inplane(w, kc, e, -exy) == rf.rsp2_inplane(w, kc, e, exy)


def test_inplane_amplitudes_vanish_on_light_cone():
    # at omega = kc the sqrt(kc^2 - omega^2) factor kills both terms
    w = kc = 0.7
    e = drude_eps_xx(w, DRUDE_DEFAULTS)
    exy = drude_eps_xy(w, DRUDE_DEFAULTS)
    g, h = rf.inplane_kerr_factors(w, kc, e, exy)
    assert g == 0.0
    assert h == 0.0


def test_drude_retarded_limit_of_polar_amplitude():
    # deep in the retarded window (1/tau << omega, kc << omega_p) the polar
    # amplitude flattens to -omega_c / omega_p
    p = DRUDE_DEFAULTS
    w, kc = 0.3, 0.5
    amp = rf.polar_kerr_amplitude(w, kc, drude_eps_xx(w, p), drude_eps_xy(w, p))
    assert amp == pytest.approx(-p.omega_c / p.omega_p, rel=0.2)


def test_drude_high_frequency_r_ss():
    # kc >> omega_p: r_ss ~ -(eps_xx - 1) omega^2 / (4 kc^2)
    p = DRUDE_DEFAULTS
    w, kc = 100.0, 10000.0
    e = drude_eps_xx(w, p)
    r_ss, _ = rf.fresnel(w, kc, e)
    assert r_ss == pytest.approx(-(e - 1.0) * w * w / (4.0 * kc * kc), rel=1e-3)


def test_hybrid_long_distance_amplitude_forms():
    # small omega, kc << omega_p: the three off-diagonal quantities approach
    # their power-law limiting forms
    p = HYBRID_DEFAULTS
    w, kc = 0.02, 0.05
    e = 1.0 + p.omega_p**2 / w**2
    exy = hybrid_eps_xy(w, p)
    amp = rf.polar_kerr_amplitude(w, kc, e, exy)
    want = -(2.0 / math.pi) * p.omega_0 * p.eps_xy_eff * w * w / p.omega_p**3
    assert amp == pytest.approx(want, rel=0.05)

    g, h = rf.inplane_kerr_factors(w, kc, e, exy)
    q = math.sqrt(kc * kc - w * w)
    g_want = -(2.0 / math.pi) * p.omega_0 * p.eps_xy_eff * q * w * w / p.omega_p**4
    h_want = (4.0 / math.pi) * p.omega_0 * p.eps_xy_eff * q * w**3 / (
        p.omega_p**4 * kc)
    assert g == pytest.approx(g_want, rel=0.05)
    assert h == pytest.approx(h_want, rel=0.05)


def test_coefficients_structure():
    m = default_drude_model()
    pt = rf.KPoint(0.2, 0.6)
    polar = rf.coefficients(m, pt, "polar")
    inplane = rf.coefficients(m, pt, "in-plane")
    assert polar.drpp2 == 0.0
    assert polar.rsp2 >= 0.0
    assert inplane.rsp2 <= 0.0
    assert inplane.drpp2 <= 0.0
    assert polar.r_ss == inplane.r_ss
    assert polar.xi == inplane.xi
    with pytest.raises(ValueError):
        rf.coefficients(m, pt, "diagonal")


def test_vectorized_matches_scalar():
    p = DRUDE_DEFAULTS
    kc = np.array([0.5, 1.0, 2.0])
    w = 0.4 * kc
    e = drude_eps_xx(w, p)
    exy = drude_eps_xy(w, p)
    vec = rf.rsp2_polar(w, kc, e, exy)
    for i in range(len(kc)):
        got = rf.rsp2_polar(w[i], kc[i], e[i], exy[i])
        assert vec[i] == pytest.approx(got, rel=1e-14)
