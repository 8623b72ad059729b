"""
Radial product coordinates for the polar-coordinate integral

With theta_j = pi/2 - t_j the domain becomes 0 <= theta_1 <= ... <= theta_p <= pi/2.
The product map theta_p = (pi/2) y_p, theta_i = theta_(i+1) y_i sends it to the
unit cube, and

    integral_D+ prod cos^(d lam) t_j f(t) delta(t) dt
        = integral_[0,1]^p prod_k y_k^(a_k) H(y) dy,   a_k = d k (lam + k) - 1,

where H is analytic and even in each y_k:

    H = (pi/2)^(d p (lam + p)) prod_i S_i^(d lam) (2 S_i)^(d-1) cos(theta_i)^(d-1+d(q-p))
        * prod_{i<j} (S_j^2 - r_ij^2 S_i^2)^d * f(pi/2 - theta),

S_i = sinc(theta_i) and r_ij = theta_i / theta_j = y_i ... y_(j-1). Every pole
of the integral in lam is carried by one of the weights y_k^(a_k).
"""
import logging
from typing import List, Optional

import numpy as np

from ..domain.models import QuadratureConfig
from ..domain.value_objects import GrassmannianSpec
from ..quadrature.rules import is_power_pole, power_rule
from ..quadrature.tensor import tensor_integral
from .profiles import InvariantFunction

logger = logging.getLogger("transform.radial")


def radial_exponents(spec: GrassmannianSpec, lam: float) -> List[float]:
    """a_k = d k (lam + k) - 1 for k = 1..p"""
    return [spec.d * k * (lam + k) - 1.0 for k in range(1, spec.p + 1)]


def radial_pole(spec: GrassmannianSpec, lam: float) -> bool:
    """True when lam is a pole of the continued integral."""
    return any(is_power_pole(a) for a in radial_exponents(spec, lam))


def radial_integrand(spec: GrassmannianSpec, f: InvariantFunction, lam: float):
    """H(y) on (m, p) arrays of points."""
    p, d = spec.p, spec.d
    cos_power = d - 1 + d * (spec.q - spec.p)
    scale = (0.5 * np.pi) ** (d * p * (lam + p))

    def integrand(y: np.ndarray) -> np.ndarray:
        theta = 0.5 * np.pi * np.cumprod(y[:, ::-1], axis=1)[:, ::-1]
        sinc = np.sinc(theta / np.pi)
        values = np.full(y.shape[0], scale)
        values = values * np.prod(sinc ** (d * lam), axis=1)
        if d > 1:
            values = values * np.prod((2.0 * sinc) ** (d - 1), axis=1)
        if cos_power:
            values = values * np.prod(np.cos(theta) ** cos_power, axis=1)
        for j in range(1, p):
            ratio = np.ones(y.shape[0])
            for i in range(j - 1, -1, -1):
                ratio = ratio * y[:, i]
                values = values * (sinc[:, j] ** 2 - ratio ** 2 * sinc[:, i] ** 2) ** d
        return values * f(0.5 * np.pi - theta)

    return integrand


def radial_integral(spec: GrassmannianSpec, f: InvariantFunction, lam: float, cfg: QuadratureConfig,
                    nodes: Optional[int] = None, threads: Optional[int] = None) -> float:
    """Continued value of integral_D+ prod cos^(d lam) t_j f(t) delta(t) dt at one resolution."""
    n = nodes or cfg.nodes_per_dim
    rules = [power_rule(n, a, cfg.scheme, cfg.continuation_nodes) for a in radial_exponents(spec, lam)]
    return tensor_integral(radial_integrand(spec, f, lam), rules, threads)
