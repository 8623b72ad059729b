import numpy as np
import pytest

from grassmann_cosine.domain.models import QuadratureConfig
from grassmann_cosine.domain.value_objects import FieldKind, GrassmannianSpec

R, C, H = FieldKind.REAL, FieldKind.COMPLEX, FieldKind.QUATERNION


@pytest.fixture
def cfg():
    return QuadratureConfig()


@pytest.fixture
def sphere():
    """Gr(1, R^3)"""
    return GrassmannianSpec(1, 2, R)


@pytest.fixture
def gr24():
    """Gr(2, R^4)"""
    return GrassmannianSpec(2, 2, R)


@pytest.fixture
def gr25():
    """Gr(2, R^5)"""
    return GrassmannianSpec(2, 3, R)


@pytest.fixture
def gr25c():
    """Gr(2, C^5)"""
    return GrassmannianSpec(2, 3, C)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def random_angles(rng):
    """count points of the fundamental domain pi/2 >= t_1 >= ... >= t_p >= 0"""

    def draw(p, count):
        return np.sort(rng.uniform(0.0, 0.5 * np.pi, (count, p)), axis=1)[:, ::-1]

    return draw
