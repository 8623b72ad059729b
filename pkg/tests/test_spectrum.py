import numpy as np
import pytest

from grassmann_cosine.core.exceptions import DomainError
from grassmann_cosine.domain.value_objects import FieldKind, GrassmannianSpec, HighestWeight
from grassmann_cosine.spectrum import (
    ac_gamma_eta,
    enumerate_weights,
    eta,
    eta_ratio_ac,
    f1_image_member,
)

R, C, H = FieldKind.REAL, FieldKind.COMPLEX, FieldKind.QUATERNION


def _weights(spec, degree):
    return [w.m for w in enumerate_weights(spec, degree)]


def test_enumerate_weights_rank_two(gr25):
    assert _weights(gr25, 4) == [(0, 0), (2, 0), (2, 2), (4, 0), (4, 2), (4, 4)]


@pytest.mark.parametrize("spec", [
    GrassmannianSpec(1, 2, R), GrassmannianSpec(2, 2, R), GrassmannianSpec(3, 4, C), GrassmannianSpec(2, 3, H),
])
def test_enumerate_weights_degree_zero(spec):
    assert _weights(spec, 0) == [(0,) * spec.p]


def test_enumerate_weights_square_case_allows_negative_last_entry(gr24):
    weights = _weights(gr24, 2)
    assert weights == [(0, 0), (2, -2), (2, 0), (2, 2)]


def test_enumerate_weights_odd_degree_rounds_down(sphere):
    assert _weights(sphere, 5) == [(0,), (2,), (4,)]
    with pytest.raises(DomainError):
        enumerate_weights(sphere, -1)


def test_highest_weight_validation(gr25):
    with pytest.raises(DomainError):
        HighestWeight((3, 1))
    with pytest.raises(DomainError):
        HighestWeight((2, 4))
    with pytest.raises(DomainError):
        HighestWeight((2, -2)).check_for(gr25)
    assert HighestWeight((4, 2)).half == (2, 1)


@pytest.mark.parametrize("spec", [
    GrassmannianSpec(1, 2, R), GrassmannianSpec(2, 3, R), GrassmannianSpec(2, 3, C), GrassmannianSpec(1, 2, H),
])
def test_eta_at_zero(spec):
    zero = HighestWeight.zero(spec.p)
    assert eta(spec, zero, 0.0).evaluate() == pytest.approx(1.0, rel=1e-13)
    for w in enumerate_weights(spec, 6):
        if not w.is_zero:
            assert eta(spec, w, 0.0).evaluate() == 0.0


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0, 2.0, 3.0])
def test_eta_zero_on_sphere(sphere, lam):
    # C^lam 1 on S^2 / {+-1}: integral_0^1 x^lam dx
    assert eta(sphere, HighestWeight((0,)), lam).evaluate() == pytest.approx(1.0 / (lam + 1.0), rel=1e-13)


def test_eta_degree_two_on_sphere(sphere):
    # phi = (3u - 1)/2, C^1 phi = integral_0^1 x (3x^2 - 1)/2 dx
    assert eta(sphere, HighestWeight((2,)), 1.0).evaluate() == pytest.approx(0.125, rel=1e-13)
    # at lam = 2 with x^2 instead: integral x^2 (3x^2 - 1)/2 dx = 2/15
    assert eta(sphere, HighestWeight((2,)), 2.0).evaluate() == pytest.approx(2.0 / 15.0, rel=1e-13)


def test_eta_pole_reported_with_order(sphere):
    value = eta(sphere, HighestWeight((0,)), -1.0)
    assert value.pole_order == 1
    assert value.reported() == pytest.approx(1.0)


def test_eta_ratio_ac(gr25):
    assert eta_ratio_ac(gr25, HighestWeight((0, 0)), -1.0).evaluate() == pytest.approx(1.0)
    assert eta_ratio_ac(gr25, HighestWeight((2, 2)), -1.0).evaluate() == 0.0
    assert abs(eta_ratio_ac(gr25, HighestWeight((4, 0)), -1.0).evaluate()) > 1e-8


def test_eta_ratio_matches_quotient_off_poles(gr25c):
    for w in enumerate_weights(gr25c, 4):
        for lam in (0.5, 1.5):
            quotient = eta(gr25c, w, lam).evaluate() / eta(gr25c, HighestWeight.zero(2), lam).evaluate()
            assert eta_ratio_ac(gr25c, w, lam).evaluate() == pytest.approx(quotient, rel=1e-12)


@pytest.mark.parametrize("spec", [GrassmannianSpec(2, 2, R), GrassmannianSpec(2, 3, R), GrassmannianSpec(2, 3, C)])
def test_image_kernel_classifier(spec):
    for w in enumerate_weights(spec, 8):
        nonzero = abs(eta_ratio_ac(spec, w, -1.0).evaluate()) > 1e-8
        assert nonzero == f1_image_member(w), w
        assert not ac_gamma_eta(spec, w, -1.0).is_pole


def test_negative_weight_lies_in_kernel(gr24):
    w = HighestWeight((2, -2))
    assert not f1_image_member(w)
    assert eta_ratio_ac(gr24, w, -1.0).evaluate() == 0.0


def test_f1_image_member():
    assert f1_image_member(HighestWeight((6, 0, 0)))
    assert not f1_image_member(HighestWeight((2, 2)))
    assert f1_image_member(HighestWeight((0, 0, 0)))


def test_ac_gamma_eta_constant_closed_form(gr25):
    # Gamma_{p,d}(dn/2) / (Gamma_{p,d}(dp/2) Gamma_{p,d}((d lam0 + d n)/2)) at lam0 = -1
    from scipy.special import gamma

    gpd = lambda x: gamma(x) * gamma(x - 0.5)
    expected = gpd(2.5) / (gpd(1.0) * gpd(2.0))
    assert ac_gamma_eta(gr25, HighestWeight((0, 0)), -1.0).evaluate() == pytest.approx(expected, rel=1e-13)


def test_ac_gamma_eta_is_gamma_times_eta_off_poles(gr25):
    from grassmann_cosine.specfun.gamma import normalizer_gamma

    for w in enumerate_weights(gr25, 4):
        product = normalizer_gamma(gr25, 0.7) * eta(gr25, w, 0.7).evaluate()
        assert ac_gamma_eta(gr25, w, 0.7).evaluate() == pytest.approx(product, rel=1e-12)


def test_eta_sign_pattern_on_sphere(sphere):
    signs = [np.sign(eta(sphere, HighestWeight((m,)), 1.0).evaluate()) for m in (2, 4, 6)]
    # (-1)^(|mu|/2) times the sign of Gamma(-1/2 + m/2) / Gamma(-1/2)
    assert signs == [1.0, -1.0, 1.0]
