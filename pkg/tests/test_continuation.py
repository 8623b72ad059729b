import pytest

from grassmann_cosine.core.exceptions import DomainError
from grassmann_cosine.domain.value_objects import FieldKind, GrassmannianSpec, HighestWeight
from grassmann_cosine.spectrum import ac_gamma_eta
from grassmann_cosine.transform import (
    ac_gamma_C,
    ac_gamma_C_report,
    constant_profile,
    partial_funk,
    profile_factory,
)
from grassmann_cosine.transform.continuation import check_pole

R, C = FieldKind.REAL, FieldKind.COMPLEX


def test_check_pole(gr25, gr25c):
    assert check_pole(gr25, -1.0) == 1
    assert check_pole(gr25, -2.0) == 2
    assert check_pole(gr25c, -1.0) == 1
    for bad in (-0.5, -3.0, 0.0, 1.0):
        with pytest.raises(DomainError):
            check_pole(gr25, bad)
    with pytest.raises(DomainError):
        check_pole(gr25c, -2.0)


def test_constant_on_sphere(sphere, cfg):
    # 1/Gamma((lam+1)/2) * 1/(lam+1) -> 1/2 at lam = -1
    assert ac_gamma_C(sphere, constant_profile(1), -1.0, cfg) == pytest.approx(0.5, rel=1e-5)


@pytest.mark.parametrize("spec", [GrassmannianSpec(2, 2, R), GrassmannianSpec(2, 3, C)], ids=str)
def test_constant_matches_closed_form(spec, cfg):
    expected = ac_gamma_eta(spec, HighestWeight.zero(spec.p), -1.0).evaluate()
    assert ac_gamma_C(spec, constant_profile(spec.p), -1.0, cfg) == pytest.approx(expected, rel=1e-4)


def test_report_carries_ladder(sphere, cfg):
    report = ac_gamma_C_report(sphere, constant_profile(1), -1.0, cfg)
    assert report.lam0 == -1.0
    assert list(report.extrapolation.epsilons) == list(cfg.extrapolation_epsilons)
    assert len(report.extrapolation.samples) == len(cfg.extrapolation_epsilons)
    assert report.error < 1e-3 * abs(report.value)


def test_sphere_pole_gives_funk_value(sphere, cfg):
    f = profile_factory.create("2 + 3*c1 - c1^2", 1)
    ratio = ac_gamma_C(sphere, f, -1.0, cfg) / ac_gamma_C(sphere, constant_profile(1), -1.0, cfg)
    assert ratio == pytest.approx(f.funk_value(), rel=1e-3)
    assert partial_funk(sphere, f, 1, cfg) == pytest.approx(2.0)


@pytest.mark.parametrize("spec", [GrassmannianSpec(2, 2, R), GrassmannianSpec(2, 3, C)], ids=str)
@pytest.mark.parametrize("name", ["sum_cos2", "cos2_last", "quartic"])
def test_first_pole_is_first_partial_funk(spec, name, cfg):
    f = profile_factory.create(name, spec.p)
    base = ac_gamma_C(spec, constant_profile(spec.p), -1.0, cfg)
    ratio = ac_gamma_C(spec, f, -1.0, cfg) / base
    assert ratio == pytest.approx(partial_funk(spec, f, 1, cfg), rel=1e-3)


@pytest.mark.slow
def test_lowest_pole_ratio_is_funk_ratio(gr25, cfg):
    f = profile_factory.create("2 - c1 + c2^2", 2)
    g = profile_factory.create("1 + c1*c2", 2)
    ratio = ac_gamma_C(gr25, f, -2.0, cfg) / ac_gamma_C(gr25, g, -2.0, cfg)
    assert ratio == pytest.approx(f.funk_value() / g.funk_value(), rel=1e-3)


@pytest.mark.slow
def test_second_pole_is_second_partial_funk(cfg):
    spec = GrassmannianSpec(3, 4, R)
    h = profile_factory.create("1 + c2*c3^2", 3)
    base = ac_gamma_C(spec, constant_profile(3), -2.0, cfg)
    ratio = ac_gamma_C(spec, h, -2.0, cfg) / base
    assert ratio == pytest.approx(partial_funk(spec, h, 2, cfg), rel=1e-3)


def test_full_funk_of_vanishing_profile(gr24, cfg):
    f = profile_factory.create("prod_cos2", 2)
    assert partial_funk(gr24, f, 2, cfg) == pytest.approx(0.0, abs=1e-30)
