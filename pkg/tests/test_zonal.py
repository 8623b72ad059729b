import numpy as np
import pytest

from grassmann_cosine.core.exceptions import DomainError
from grassmann_cosine.domain.value_objects import FieldKind, GrassmannianSpec, HighestWeight
from grassmann_cosine.spectrum import eta
from grassmann_cosine.zonal import build_zonal_basis, eigenvalue_numeric, monomial_symmetric

ORACLE_LAMBDAS = [-0.5, 0.0, 0.5, 1.0, 2.0, 3.0]


@pytest.fixture(scope="module")
def sphere_basis():
    return build_zonal_basis(GrassmannianSpec(1, 2, FieldKind.REAL), 8)


@pytest.fixture(scope="module")
def rank_two_basis():
    return build_zonal_basis(GrassmannianSpec(2, 3, FieldKind.REAL), 4)


def test_monomial_symmetric():
    u = np.array([[0.5, 0.25], [1.0, 2.0]])
    assert np.allclose(monomial_symmetric((1, 0), u), [0.75, 3.0])
    assert np.allclose(monomial_symmetric((1, 1), u), [0.125, 2.0])
    assert np.allclose(monomial_symmetric((2, 1), u), [0.5 ** 2 * 0.25 + 0.25 ** 2 * 0.5, 4.0 + 2.0])


def test_degree_two_zonal_on_sphere(sphere_basis):
    # Legendre P_2 in u = cos^2
    entry = sphere_basis.entry(HighestWeight((2,)))
    assert sphere_basis.monomials[:2] == [(0,), (1,)]
    assert entry.coeffs[:2] == pytest.approx([-0.5, 1.5], rel=1e-10)
    assert np.allclose(entry.coeffs[2:], 0.0, atol=1e-10)


def test_zonal_functions_are_normalized_at_base_point(sphere_basis, rank_two_basis):
    for basis in (sphere_basis, rank_two_basis):
        ones = np.ones(basis.spec.p)
        for w in basis.weights():
            assert basis.phi(w)(ones) == pytest.approx(1.0, rel=1e-10)


def test_zonal_functions_are_orthogonal(rank_two_basis):
    weights = rank_two_basis.weights()
    assert [w.m for w in weights] == [(0, 0), (2, 0), (2, 2), (4, 0), (4, 2), (4, 4)]
    for i, a in enumerate(weights):
        for b in weights[i + 1:]:
            assert abs(rank_two_basis.inner(a, b)) < 1e-8 * np.sqrt(
                rank_two_basis.inner(a, a) * rank_two_basis.inner(b, b)
            )


@pytest.mark.parametrize("m", [0, 2, 4, 6, 8])
@pytest.mark.parametrize("lam", ORACLE_LAMBDAS)
def test_measured_eigenvalues_on_sphere(sphere_basis, m, lam, cfg):
    mu = HighestWeight((m,))
    expected = eta(sphere_basis.spec, mu, lam).evaluate()
    assert eigenvalue_numeric(sphere_basis.spec, sphere_basis, mu, lam, cfg) == pytest.approx(
        expected, rel=1e-6, abs=1e-8
    )


@pytest.mark.parametrize("m", [(0, 0), (2, 0), (2, 2), (4, 0), (4, 2), (4, 4)])
@pytest.mark.parametrize("lam", ORACLE_LAMBDAS)
def test_measured_eigenvalues_rank_two(rank_two_basis, m, lam, cfg):
    mu = HighestWeight(m)
    expected = eta(rank_two_basis.spec, mu, lam).evaluate()
    assert eigenvalue_numeric(rank_two_basis.spec, rank_two_basis, mu, lam, cfg) == pytest.approx(
        expected, rel=1e-4, abs=1e-8
    )


@pytest.mark.parametrize("basis_name", ["sphere_basis", "rank_two_basis"])
def test_measured_eigenvalues_vanish_at_lambda_zero(request, basis_name, cfg):
    basis = request.getfixturevalue(basis_name)
    for w in basis.weights():
        if not w.is_zero:
            assert abs(eigenvalue_numeric(basis.spec, basis, w, 0.0, cfg)) < 1e-8


def test_basis_arguments():
    with pytest.raises(DomainError):
        build_zonal_basis(GrassmannianSpec(3, 4, FieldKind.REAL), 2)
    with pytest.raises(DomainError):
        build_zonal_basis(GrassmannianSpec(1, 2, FieldKind.REAL), 3)


def test_eigenvalue_checks(sphere_basis, rank_two_basis, cfg):
    with pytest.raises(DomainError):
        eigenvalue_numeric(rank_two_basis.spec, sphere_basis, HighestWeight((2,)), 1.0, cfg)
    with pytest.raises(DomainError):
        eigenvalue_numeric(sphere_basis.spec, sphere_basis, HighestWeight((2,)), -1.0, cfg)
    with pytest.raises(DomainError):
        sphere_basis.entry(HighestWeight((10,)))
