"""
Analytic continuation of gamma(lam) C^lam f(beta) to the poles lam = -1, ..., -p
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ..core.exceptions import DomainError
from ..domain.models import QuadratureConfig
from ..domain.value_objects import GrassmannianSpec
from ..quadrature.extrapolation import ExtrapolationResult, extrapolate_to_zero
from ..specfun.gamma import normalizer_gamma
from .cosine import continued_transform
from .profiles import InvariantFunction

logger = logging.getLogger("transform.continuation")


@dataclass
class ContinuationReport:
    lam0: float
    value: float
    error: float
    extrapolation: ExtrapolationResult


def check_pole(spec: GrassmannianSpec, lam0: float) -> int:
    """Validate lam0 as one of -1, ..., -p and return m = -lam0."""
    m = int(round(-lam0))
    if abs(lam0 + m) > 1e-12 or not 1 <= m <= spec.p:
        raise DomainError(f"lam0 must be one of -1, ..., -{spec.p}, got {lam0}")
    if m >= 2 and spec.d != 1:
        raise DomainError(f"Poles below -1 are only supported over R, not on {spec}")
    return m


def ac_gamma_C_report(spec: GrassmannianSpec, f: InvariantFunction, lam0: float,
                      cfg: Optional[QuadratureConfig] = None) -> ContinuationReport:
    """Extrapolate gamma(lam0 + eps) C^(lam0 + eps) f(beta) to eps = 0."""
    cfg = cfg if cfg is not None else QuadratureConfig.from_settings()
    check_pole(spec, lam0)
    samples = []
    for eps in cfg.extrapolation_epsilons:
        lam = lam0 + eps
        value = normalizer_gamma(spec, lam) * continued_transform(spec, f, lam, cfg)
        logger.debug(f"gamma*C at lam={lam:.6g} ({f.name}, {spec}): {value:.16g}")
        samples.append(value)
    result = extrapolate_to_zero(
        cfg.extrapolation_epsilons,
        samples,
        degree=cfg.extrapolation_degree,
        rel_tol=cfg.extrapolation_rel_tol,
        # limits that vanish are judged against the size of the samples
        abs_tol=cfg.extrapolation_rel_tol * 1e-3 * max(abs(s) for s in samples),
    )
    logger.info(f"a.c. of gamma*C^lam[{f.name}] at {lam0:g} on {spec}: {result.value:.12g} (+- {result.error:.2e})")
    return ContinuationReport(lam0=lam0, value=result.value, error=result.error, extrapolation=result)


def ac_gamma_C(spec: GrassmannianSpec, f: InvariantFunction, lam0: float,
               cfg: Optional[QuadratureConfig] = None) -> float:
    """Value of gamma(lam) C^lam f(beta) continued to lam0 in {-1, ..., -p}."""
    return ac_gamma_C_report(spec, f, lam0, cfg).value
