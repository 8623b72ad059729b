"""
Cosine-lambda transform at the base point by quadrature

Measures are normalized to unit mass: C^lam f(beta) = I_f(lam) / I_1(0) with
I_f(lam) = integral_D+ prod cos^(d lam) t_j f(t) delta(t) dt. With this
convention C^lam 1 = eta_0(lam).
"""
import logging
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from ..core.exceptions import DomainError
from ..domain.models import QuadratureConfig
from ..domain.value_objects import GrassmannianSpec
from ..quadrature.tensor import refine
from .profiles import InvariantFunction
from .radial import radial_integral, radial_pole

logger = logging.getLogger("transform.quadrature")


def constant_profile(p: int, value: float = 1.0) -> InvariantFunction:
    return InvariantFunction(p, lambda t: np.full(t.shape[:-1], value), name="one" if value == 1.0 else str(value))


def _resolve(cfg: Optional[QuadratureConfig]) -> QuadratureConfig:
    return cfg if cfg is not None else QuadratureConfig.from_settings()


@lru_cache(maxsize=64)
def unit_mass(spec: GrassmannianSpec, cfg: QuadratureConfig) -> float:
    """I_1(0), the total mass of the polar-coordinate measure."""
    one = constant_profile(spec.p)
    value, _ = refine(lambda n: radial_integral(spec, one, 0.0, cfg, nodes=n), cfg, label=f"mass {spec}")
    return value


def continued_transform_with_error(spec: GrassmannianSpec, f: InvariantFunction, lam: float,
                                   cfg: Optional[QuadratureConfig] = None) -> Tuple[float, float]:
    """Continued value of C^lam f(beta) and the change over the last refinement."""
    cfg = _resolve(cfg)
    if f.p != spec.p:
        raise DomainError(f"Profile {f.name} has {f.p} angles, {spec} has rank {spec.p}")
    if radial_pole(spec, lam):
        raise DomainError(f"lam = {lam} is a pole of C^lam on {spec}")
    value, error = refine(
        lambda n: radial_integral(spec, f, lam, cfg, nodes=n),
        cfg,
        label=f"C^{lam:g} {f.name} on {spec}",
    )
    mass = unit_mass(spec, cfg)
    result = value / mass
    logger.debug(f"C^{lam:g}[{f.name}] on {spec} = {result:.16g} (quadrature change {error:.2e})")
    return result, error / mass


def continued_transform(spec: GrassmannianSpec, f: InvariantFunction, lam: float,
                        cfg: Optional[QuadratureConfig] = None) -> float:
    """Meromorphic continuation of lam -> C^lam f(beta) at a real non-pole lam."""
    return continued_transform_with_error(spec, f, lam, cfg)[0]


def cosine_quadrature(spec: GrassmannianSpec, f: InvariantFunction, lam: float,
                      cfg: Optional[QuadratureConfig] = None) -> float:
    """C^lam f(beta) in the region of absolute convergence d*lam > -1."""
    if spec.d * lam <= -1.0:
        raise DomainError(f"C^lam needs d*lam > -1, got d*lam = {spec.d * lam:g} on {spec}")
    return continued_transform(spec, f, lam, cfg)
