import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photon_fusion import constants as k

finite = st.floats(min_value=-1e30, max_value=1e30, allow_nan=False, allow_infinity=False)


def test_codata_values_are_pinned():
    assert k.CODATA_2018.hbar == 1.054571817e-34
    assert k.CODATA_2018.mu_bohr == 9.2740100783e-24
    assert k.CODATA_2018.c == 299792458.0
    assert k.CODATA_2018.electronvolt == 1.602176634e-19


@pytest.mark.parametrize("e, joule", [(0.0, 0.0), (1.0, 1.602176634e-19), (1e-3, 1.602176634e-22)])
def test_ev_to_joule(e, joule):
    assert k.ev_to_joule(e) == pytest.approx(joule, rel=1e-15, abs=0.0)


def test_tesla_to_ev2():
    assert k.tesla_to_ev2(0.0) == 0.0
    assert k.tesla_to_ev2(1.0) == pytest.approx(195.35, abs=0.01)
    assert k.tesla_to_ev2(5.0) == pytest.approx(976.7, abs=0.1)


def test_tesla_factor_matches_direct_evaluation():
    direct = np.sqrt((k.HBAR * k.C) ** 3 / k.MU_0) / k.ELECTRONVOLT ** 2
    assert k.TESLA_TO_EV2 == pytest.approx(direct, rel=1e-15)


def test_meter_to_inverse_ev():
    assert k.meter_to_inverse_ev(0.0) == 0.0
    assert k.meter_to_inverse_ev(1.0) == pytest.approx(5.0677e6, rel=1e-4)
    assert k.meter_to_inverse_ev(k.HBAR_C_EV_M) == pytest.approx(1.0, rel=1e-15)
    assert k.HBAR_C_EV_M == pytest.approx(1.9733e-7, rel=1e-4)


@pytest.mark.parametrize("b, dn", [(0.0, 0.0), (1.0, 4e-24), (5.0, 1e-22)])
def test_qed_reference(b, dn):
    assert k.qed_reference_birefringence(b) == pytest.approx(dn, rel=1e-15, abs=0.0)


def test_qed_reference_one_tesla_is_exact():
    assert k.qed_reference_birefringence(1.0) == 4e-24


@settings(max_examples=200, deadline=None)
@given(x=finite)
def test_round_trips(x):
    pairs = [
        (k.ev_to_joule, k.joule_to_ev),
        (k.tesla_to_ev2, k.ev2_to_tesla),
        (k.meter_to_inverse_ev, k.inverse_ev_to_meter),
    ]
    for forward, back in pairs:
        assert back(forward(x)) == pytest.approx(x, rel=1e-14, abs=1e-300)


@settings(max_examples=200, deadline=None)
@given(x=finite, a=st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
def test_conversions_are_linear(x, a):
    for f in (k.ev_to_joule, k.tesla_to_ev2, k.meter_to_inverse_ev, k.inverse_gev_to_inverse_ev):
        assert f(a * x) == pytest.approx(a * f(x), rel=1e-14, abs=1e-300)
