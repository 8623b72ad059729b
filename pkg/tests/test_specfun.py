import math

import numpy as np
import pytest

from grassmann_cosine.core.exceptions import DomainError
from grassmann_cosine.domain.value_objects import FieldKind, GrassmannianSpec
from grassmann_cosine.specfun.densities import density_delta, density_nu, nu_exponent
from grassmann_cosine.specfun.gamma import (
    LaurentLedger,
    gamma_pd,
    nonpositive_integer,
    normalizer_gamma,
    pole_order_C,
    pole_set,
)

R, C, H = FieldKind.REAL, FieldKind.COMPLEX, FieldKind.QUATERNION


def test_nonpositive_integer():
    assert nonpositive_integer(0.0) == 0
    assert nonpositive_integer(-3.0) == 3
    assert nonpositive_integer(-2.5) is None
    assert nonpositive_integer(1.0) is None


@pytest.mark.parametrize("p,d,lam,expected", [
    (1, 1, 0.5, math.sqrt(math.pi)),
    (2, 1, 2.0, math.sqrt(math.pi) / 2.0),
    (2, 2, 3.0, 2.0),
    (3, 1, 2.5, 0.375 * math.pi),
])
def test_gamma_pd_values(p, d, lam, expected):
    value = gamma_pd(p, d, lam)
    assert value.pole_order == 0
    assert value.value == pytest.approx(expected, rel=1e-13)


def test_gamma_pd_pole():
    value = gamma_pd(2, 1, 0.5)
    assert value.pole_order == 1
    assert value.is_pole
    # Gamma(1/2) * Gamma(eps) ~ sqrt(pi) / eps
    assert value.value == pytest.approx(math.sqrt(math.pi))


def test_gamma_pd_vector_arguments():
    value = gamma_pd(2, 2, [3.0, 4.0])
    # Gamma(3) * Gamma(3)
    assert value.value == pytest.approx(4.0)


@pytest.mark.parametrize("x", [0.3, 1.7, 4.25, 11.5, -0.4, -2.6])
def test_gamma_factor_recurrence(x):
    # Gamma(x + 1) = x Gamma(x) in the first factor of every Gamma_{p,d}
    assert gamma_pd(1, 1, x + 1.0).value == pytest.approx(x * gamma_pd(1, 1, x).value, rel=1e-12)
    for p, d in ((2, 1), (3, 2), (2, 4)):
        rest = [2.5 + j for j in range(p - 1)]
        shifted = gamma_pd(p, d, [x + 1.0] + rest).value
        assert shifted == pytest.approx(x * gamma_pd(p, d, [x] + rest).value, rel=1e-12)


def test_gamma_pd_overflow_is_infinite():
    assert gamma_pd(1, 1, 200.0).value == math.inf
    assert gamma_pd(1, 1, 170.0).value == pytest.approx(math.gamma(170.0), rel=1e-12)
    assert gamma_pd(2, 1, 171.0).value == math.inf
    assert normalizer_gamma(GrassmannianSpec(1, 2, R), 400.0) == 0.0


def test_ledger_cancels_poles_symbolically():
    # Gamma(x) / Gamma(x) at x = -2 with matching slopes is exactly 1
    ledger = LaurentLedger().multiply(-2.0, slope=0.5).divide(-2.0, slope=0.5)
    scalar = ledger.to_scalar()
    assert scalar.pole_order == 0
    assert scalar.value == pytest.approx(1.0)


def test_ledger_residue_and_slope():
    # Gamma(-lam) near lam = 1: argument -1, slope -1, residue (-1)^1 / (1! * -1) = 1
    scalar = LaurentLedger().multiply(-1.0, slope=-1.0).to_scalar()
    assert scalar.pole_order == 1
    assert scalar.value == pytest.approx(1.0)
    assert scalar.reported() == pytest.approx(1.0)
    assert math.isinf(scalar.evaluate())


def test_ledger_zero():
    scalar = LaurentLedger().divide(0.0).to_scalar()
    assert scalar.pole_order == -1
    assert scalar.is_zero
    assert scalar.evaluate() == 0.0


def test_normalizer_gamma():
    spec = GrassmannianSpec(2, 3, R)
    assert normalizer_gamma(spec, 0.0) == pytest.approx(1.0 / math.sqrt(math.pi))
    assert normalizer_gamma(spec, -1.0) == 0.0
    assert normalizer_gamma(spec, -2.0) == 0.0


@pytest.mark.parametrize("p,d,lam0,expected", [
    (2, 1, -1.0, 1),
    (2, 1, -2.0, 1),
    (3, 1, -2.0, 1),
    (3, 1, -3.0, 2),
    (4, 1, -4.0, 2),
    (1, 1, -1.0, 1),
    (1, 1, -2.0, 0),
    (1, 1, -3.0, 1),
    (2, 1, -0.5, 0),
    (2, 2, -1.0, 1),
    (2, 2, -2.0, 2),
    (2, 2, -1.5, 0),
    (1, 4, -1.5, 1),
    (2, 4, -1.5, 1),
    (2, 4, -1.0, 1),
    (2, 4, -0.5, 0),
    (2, 1, 1.0, 0),
])
def test_pole_order_C(p, d, lam0, expected):
    field = {1: R, 2: C, 4: H}[d]
    assert pole_order_C(GrassmannianSpec(p, p + 1, field), lam0) == expected


def test_pole_set():
    assert list(pole_set(GrassmannianSpec(1, 2, R), -5.0)) == [-1.0, -3.0, -5.0]
    assert list(pole_set(GrassmannianSpec(2, 3, C), -2.0)) == [-1.0, -2.0]
    assert list(pole_set(GrassmannianSpec(1, 2, H), -2.0)) == [-1.0, -1.5, -2.0]


def test_density_delta_vanishes_on_walls():
    for field in (R, C, H):
        spec = GrassmannianSpec(2, 3, field)
        assert density_delta(spec, 0, [0.7, 0.7]) == 0.0


def test_density_delta_formula():
    spec = GrassmannianSpec(2, 3, C)
    t = np.array([1.1, 0.4])
    expected = np.prod(2.0 * np.cos(t) * np.sin(t) ** 3) * (np.cos(t[0]) ** 2 - np.cos(t[1]) ** 2) ** 2
    assert density_delta(spec, 0, t) == pytest.approx(expected)
    # after dropping one angle only t_2 remains
    assert density_delta(spec, 1, [0.4]) == pytest.approx(2.0 * np.cos(0.4) * np.sin(0.4) ** 3)


def test_density_delta_stacks():
    spec = GrassmannianSpec(2, 2, R)
    t = np.array([[1.0, 0.5], [0.9, 0.1], [0.3, 0.3]])
    values = density_delta(spec, 0, t)
    assert values.shape == (3,)
    assert values[2] == 0.0
    assert values[0] == pytest.approx(abs(np.cos(1.0) ** 2 - np.cos(0.5) ** 2))


def test_density_delta_argument_checks():
    spec = GrassmannianSpec(2, 3, R)
    with pytest.raises(DomainError):
        density_delta(spec, 2, [0.1])
    with pytest.raises(DomainError):
        density_delta(spec, 0, [0.1])


def test_density_nu():
    spec = GrassmannianSpec(2, 3, R)
    assert nu_exponent(spec) == pytest.approx(0.0)
    assert density_nu(spec, 0, 2, [0.3, 0.3]) == 0.0
    assert density_nu(spec, 0, 2, [0.2, 0.7]) == pytest.approx(0.5)
    spec = GrassmannianSpec(1, 3, C)
    # (d - 2 + d(q - p))/2 = 2
    assert density_nu(spec, 0, 1, [0.25]) == pytest.approx(0.75 ** 2)
    with pytest.raises(DomainError):
        density_nu(spec, 0, 1, [1.5])
