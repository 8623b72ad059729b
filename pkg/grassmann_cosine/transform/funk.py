"""
Partial cosine-Funk transforms and the Funk transform

Pinning t_1 = ... = t_m = pi/2 leaves the integral over the remaining ordered
angles of prod_{i>m} |cos t_i|^(d m) f(pi/2, ..., pi/2, t_(m+1), ..., t_p) delta_m,
which is the rank-(p-m) cosine transform at lam = m on Gr(p-m, K^(n-2m)).
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Tuple

import numpy as np

from ..config.settings import get_settings
from ..core.exceptions import DomainError
from ..domain.models import QuadratureConfig
from ..domain.value_objects import GrassmannianSpec
from ..manifold.frames import Subspace, quaternion_embed
from ..manifold.sampling import l_sample
from ..quadrature.simplex import t_simplex_integral
from ..quadrature.tensor import refine
from ..specfun.densities import density_delta
from .cosine import constant_profile
from .montecarlo import mean_and_stderr
from .profiles import InvariantFunction

logger = logging.getLogger("transform.funk")


def funk_exponent(spec: GrassmannianSpec, m: int) -> int:
    """Power of |cos t_i| left on the free angles after pinning m of them."""
    return spec.d * m


def _check_pins(spec: GrassmannianSpec, m: int) -> None:
    if not 1 <= m <= spec.p:
        raise DomainError(f"Pin count must lie in 1..{spec.p}, got {m}")
    if m >= 2 and spec.d != 1:
        raise DomainError(f"Partial Funk transforms with m >= 2 are only defined over R, not on {spec}")


def _pinned_integral(spec: GrassmannianSpec, g: InvariantFunction, m: int, nodes: int) -> float:
    power = funk_exponent(spec, m)

    def integrand(t: np.ndarray) -> np.ndarray:
        kernel = np.prod(np.abs(np.cos(t)) ** power, axis=-1)
        return kernel * g(t) * density_delta(spec, m, t)

    return t_simplex_integral(integrand, spec.p - m, 0.5 * np.pi, nodes)


def partial_funk(spec: GrassmannianSpec, f: InvariantFunction, m: int,
                 cfg: Optional[QuadratureConfig] = None) -> float:
    """F_m f(beta), normalized so that F_m 1 = 1."""
    cfg = cfg if cfg is not None else QuadratureConfig.from_settings()
    _check_pins(spec, m)
    if m == spec.p:
        return funk_evaluate(spec, f)
    g = f.pinned(m)
    one = constant_profile(spec.p - m)
    value, _ = refine(lambda n: _pinned_integral(spec, g, m, n), cfg, label=f"F_{m} {f.name}")
    mass, _ = refine(lambda n: _pinned_integral(spec, one, m, n), cfg, label=f"F_{m} mass")
    result = value / mass
    logger.debug(f"F_{m}[{f.name}] on {spec} = {result:.16g}")
    return result


def funk_evaluate(spec: GrassmannianSpec, f: InvariantFunction) -> float:
    """Funk transform at beta: f(pi/2, ..., pi/2)."""
    if f.p != spec.p:
        raise DomainError(f"Profile {f.name} has {f.p} angles, {spec} has rank {spec.p}")
    return f.funk_value()


def orthogonal_point(spec: GrassmannianSpec) -> Subspace:
    """span(e_(n-p+1), ..., e_n), a point of beta-perp."""
    frame = np.zeros((spec.n, spec.p))
    frame[spec.n - spec.p:, :] = np.eye(spec.p)
    if spec.is_quaternion:
        frame = quaternion_embed(frame, np.zeros_like(frame))
    return Subspace(spec, frame)


def funk_evaluate_subspace(spec: GrassmannianSpec, f: Callable[[Subspace], float], n: int, seed: int,
                           threads: Optional[int] = None) -> Tuple[float, float]:
    """L-average of f over l.sigma for sigma in beta-perp, by Monte Carlo (mean, stderr)."""
    if n < 1:
        raise DomainError("Monte Carlo needs at least one sample")
    sigma = orthogonal_point(spec)
    seeds = np.random.SeedSequence(seed).generate_state(n)

    def draw(i: int) -> float:
        return float(f(sigma.apply(l_sample(spec, int(seeds[i])))))

    workers = threads if threads is not None else get_settings().threads
    if workers <= 1:
        values = [draw(i) for i in range(n)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(draw, range(n)))
    values = np.asarray(values)
    mean, stderr = mean_and_stderr([math.fsum(values)], [math.fsum(values * values)], n)
    logger.debug(f"L-average on {spec}: {mean:.10g} +- {stderr:.3g}")
    return mean, stderr
