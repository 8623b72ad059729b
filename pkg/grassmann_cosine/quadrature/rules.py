"""
One-dimensional rules on [0, 1]

Every rule integrates against an optional power weight y^a:
    integral_0^1 y^a g(y) dy ~ sum_j w_j g(y_j)
For a <= -1 the integral diverges and the continued rule returns its
meromorphic continuation in a, valid for integrands g that are even and
analytic in y.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from ..core.exceptions import DomainError
from ..domain.models import QuadratureScheme

logger = logging.getLogger("quadrature.rules")

# split point of the continued rule between product integration and Gauss-Legendre
SPLIT = 0.5
POLE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Rule1D:
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.nodes)

    def integrate(self, g) -> float:
        return float(np.dot(self.weights, g(self.nodes)))


@lru_cache(maxsize=64)
def _legendre(n: int):
    x, w = roots_legendre(n)
    return 0.5 * (x + 1.0), 0.5 * w


def gauss_legendre(n: int, lower: float = 0.0, upper: float = 1.0) -> Rule1D:
    """n-point Gauss-Legendre rule on [lower, upper]."""
    y, w = _legendre(n)
    span = upper - lower
    return Rule1D(lower + span * y, span * w)


def gauss_jacobi_power(n: int, a: float) -> Rule1D:
    """Gauss rule for the weight y^a on [0, 1] (a > -1)."""
    if a <= -1.0:
        raise DomainError(f"Gauss-Jacobi weight y^{a} is not integrable")
    x, w = roots_jacobi(n, 0.0, a)
    return Rule1D(0.5 * (x + 1.0), w / 2.0 ** (a + 1.0))


def tanh_sinh(n: int) -> Rule1D:
    """Double-exponential rule on [0, 1] with about n nodes."""
    half = max((n - 1) // 2, 3)
    h = 3.2 / half
    t = h * np.arange(-half, half + 1)
    arg = 0.5 * np.pi * np.sinh(t)
    # 1 - tanh and 1 + tanh without cancellation
    lower = 1.0 / (np.exp(2.0 * arg) + 1.0)
    nodes = lower
    weights = h * 0.25 * np.pi * np.cosh(t) / np.cosh(arg) ** 2
    keep = (nodes > 0.0) & (nodes < 1.0) & (weights > 0.0)
    return Rule1D(nodes[keep][::-1].copy(), weights[keep][::-1].copy())


def is_power_pole(a: float) -> bool:
    """integral_0^1 y^a g(y) dy, g even, has a pole at a = -1, -3, -5, ..."""
    if a > -1.0 + POLE_TOL:
        return False
    k = (-1.0 - a) / 2.0
    return abs(k - round(k)) < POLE_TOL


@lru_cache(maxsize=256)
def _continued_block(a: float, count: int):
    """Product-integration weights on [0, SPLIT] for y^a with even integrands.

    With z = y^2 the block reads (1/2) integral_0^{c^2} z^b G(z) dz, b = (a-1)/2.
    G is interpolated at Chebyshev points and the continued moments
    integral_0^1 s^(b+j) ds = 1/(b+j+1) are integrated exactly.
    """
    b = 0.5 * (a - 1.0)
    c2 = SPLIT ** 2
    s = 0.5 * (1.0 - np.cos(np.pi * (np.arange(count) + 0.5) / count))
    powers = np.arange(count)
    moments = 1.0 / (b + powers + 1.0)
    vander = s[:, None] ** powers[None, :]
    w = np.linalg.solve(vander.T, moments)
    return SPLIT * np.sqrt(s), 0.5 * c2 ** (b + 1.0) * w


def continued_power_rule(n: int, a: float, block_nodes: int = 12) -> Rule1D:
    """Rule for the continuation of integral_0^1 y^a g(y) dy to a < -1."""
    if is_power_pole(a):
        raise DomainError(f"Power weight y^{a} sits on a pole of the continued integral")
    near_nodes, near_weights = _continued_block(float(a), block_nodes)
    far = gauss_legendre(n, SPLIT, 1.0)
    nodes = np.concatenate([near_nodes, far.nodes])
    weights = np.concatenate([near_weights, far.weights * far.nodes ** a])
    return Rule1D(nodes, weights)


def power_rule(n: int, a: float, scheme: QuadratureScheme = QuadratureScheme.GAUSS_JACOBI,
               block_nodes: Optional[int] = 12) -> Rule1D:
    """Rule for integral_0^1 y^a g(y) dy, continued below a = -1."""
    if is_power_pole(a):
        raise DomainError(f"Power weight y^{a} sits on a pole of the continued integral")
    if a <= -1.0:
        return continued_power_rule(n, a, block_nodes or 12)
    if scheme is QuadratureScheme.GAUSS_JACOBI:
        return gauss_jacobi_power(n, a)
    base = gauss_legendre(n) if scheme is QuadratureScheme.GAUSS_LEGENDRE else tanh_sinh(n)
    return Rule1D(base.nodes, base.weights * base.nodes ** a)
