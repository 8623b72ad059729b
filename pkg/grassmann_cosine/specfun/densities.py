"""
Integration densities of the polar-coordinate formula

Both densities accept a single point or a stack of points along the last axis
and return exact zeros on the Weyl-chamber walls.
"""
from typing import Union

import numpy as np

from ..core.exceptions import DomainError
from ..domain.value_objects import GrassmannianSpec

ArrayOrFloat = Union[float, np.ndarray]


def _vandermonde_power(x: np.ndarray, power: float) -> np.ndarray:
    """prod_{i<j} |x_i - x_j|^power over the last axis."""
    result = np.ones(x.shape[:-1])
    count = x.shape[-1]
    for i in range(count):
        for j in range(i + 1, count):
            result = result * np.abs(x[..., i] - x[..., j]) ** power
    return result


def _finish(values: np.ndarray) -> ArrayOrFloat:
    return float(values) if values.ndim == 0 else values


def density_delta(spec: GrassmannianSpec, k: int, t_k) -> ArrayOrFloat:
    """delta_k(t_k) for the angles t_{k+1}, ..., t_p.

    prod |2 cos t_i|^(d-1) |sin t_i|^(d-1+d(q-p)) * prod_{i<j} |cos^2 t_i - cos^2 t_j|^d
    """
    if not 0 <= k < spec.p:
        raise DomainError(f"Drop index k={k} outside [0, {spec.p})")
    t = np.asarray(t_k, dtype=float)
    if t.shape[-1:] != (spec.p - k,):
        raise DomainError(f"delta_{k} on {spec} needs {spec.p - k} angles, got shape {t.shape}")
    d = spec.d
    cos_t = np.cos(t)
    sin_t = np.abs(np.sin(t))
    radial = np.abs(2.0 * cos_t) ** (d - 1) * sin_t ** (d - 1 + d * (spec.q - spec.p))
    values = np.prod(radial, axis=-1) * _vandermonde_power(cos_t ** 2, d)
    return _finish(values)


def nu_exponent(spec: GrassmannianSpec) -> float:
    """Exponent (d - 2 + d(q - p))/2 of the (1 - u_i) factors."""
    return 0.5 * (spec.d - 2 + spec.d * (spec.q - spec.p))


def density_nu(spec: GrassmannianSpec, k: int, m: int, u, complement=None) -> ArrayOrFloat:
    """nu_k^m(u) = prod (1 - u_i)^((d-2+d(q-p))/2) * prod_{i<j} |u_i - u_j|^d.

    No u_i powers appear here; the kernel carries them. complement may pass
    1 - u when it is known more accurately than by subtraction.
    """
    if not 0 <= k < m <= spec.p:
        raise DomainError(f"Need 0 <= k < m <= p, got k={k}, m={m} on {spec}")
    x = np.asarray(u, dtype=float)
    if x.shape[-1:] != (m - k,):
        raise DomainError(f"nu_{k}^{m} needs {m - k} coordinates, got shape {x.shape}")
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise DomainError("u coordinates must lie in [0, 1]")
    exponent = nu_exponent(spec)
    if exponent == 0:
        boundary = np.ones(x.shape[:-1])
    else:
        with np.errstate(divide="ignore"):
            rest = 1.0 - x if complement is None else np.asarray(complement, dtype=float)
            boundary = np.prod(rest ** exponent, axis=-1)
    values = boundary * _vandermonde_power(x, spec.d)
    return _finish(values)
