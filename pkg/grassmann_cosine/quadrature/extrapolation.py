"""
Polynomial extrapolation of eps -> F(eps) to eps = 0
"""
import logging
from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from ..core.exceptions import ConvergenceError, DomainError

logger = logging.getLogger("quadrature.extrapolation")


@dataclass
class ExtrapolationResult:
    value: float
    error: float
    # constant term of each sliding window, coarsest window first
    window_limits: List[float] = field(default_factory=list)
    epsilons: List[float] = field(default_factory=list)
    samples: List[float] = field(default_factory=list)


def limit_coeffs(eps_vals: Sequence[float], f_vals: Sequence[float]) -> np.ndarray:
    """Coefficients c_0..c_k of the polynomial through the points (eps, f)."""
    eps = np.asarray(eps_vals, dtype=float)
    mat = eps[:, None] ** np.arange(len(eps))[None, :]
    return np.linalg.solve(mat, np.asarray(f_vals, dtype=float))


def extrapolate_to_zero(eps_vals: Sequence[float], f_vals: Sequence[float], degree: int = 3,
                        rel_tol: float = 1e-3, abs_tol: float = 1e-12) -> ExtrapolationResult:
    """Limit at eps = 0 from windows of degree + 1 consecutive samples.

    The last (finest) window gives the value; its distance to the previous
    window is the error estimate and must stay within rel_tol.
    """
    eps = list(map(float, eps_vals))
    values = list(map(float, f_vals))
    if len(eps) != len(values):
        raise DomainError("eps_vals and f_vals differ in length")
    width = min(degree + 1, len(eps))
    if width < 2:
        raise DomainError("Need at least two samples to extrapolate")

    limits = [
        float(limit_coeffs(eps[i:i + width], values[i:i + width])[0])
        for i in range(len(eps) - width + 1)
    ]
    value = limits[-1]
    error = abs(limits[-1] - limits[-2]) if len(limits) > 1 else abs(values[-1] - value)
    logger.debug(f"extrapolation windows: {limits}")
    result = ExtrapolationResult(value=value, error=error, window_limits=limits, epsilons=eps, samples=values)
    if not np.isfinite(value) or error > rel_tol * abs(value) + abs_tol:
        raise ConvergenceError(
            f"Extrapolants disagree: last two windows give {limits[-2:]} (change {error:.3e})",
            estimate=value,
            error=error,
        )
    return result
