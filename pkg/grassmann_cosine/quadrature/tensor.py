"""
Tensor-product integration with chunked, order-stable reduction
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from ..config.settings import get_settings
from ..core.exceptions import ConvergenceError
from ..domain.models import QuadratureConfig
from .rules import Rule1D

logger = logging.getLogger("quadrature.tensor")

PointFunction = Callable[[np.ndarray], np.ndarray]


def _grid(rules: Sequence[Rule1D]) -> Tuple[np.ndarray, np.ndarray]:
    """All node combinations of the trailing rules as (m, k) points and (m,) weights."""
    if not rules:
        return np.zeros((1, 0)), np.ones(1)
    mesh = np.meshgrid(*[r.nodes for r in rules], indexing="ij")
    wmesh = np.meshgrid(*[r.weights for r in rules], indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=-1)
    weights = np.prod(np.stack([w.ravel() for w in wmesh], axis=-1), axis=-1)
    return points, weights


def tensor_integral(func: PointFunction, rules: Sequence[Rule1D], threads: Optional[int] = None) -> float:
    """sum over the product grid of w_1 ... w_k func(y_1, ..., y_k).

    func receives an (m, k) array of points. Work is split by the nodes of the
    first rule; partial sums are added in node order, so the result does not
    depend on the number of threads.
    """
    if not rules:
        return float(func(np.zeros((1, 0)))[0])
    lead, rest = rules[0], rules[1:]
    points, weights = _grid(rest)

    def chunk(index: int) -> float:
        head = np.full((points.shape[0], 1), lead.nodes[index])
        values = func(np.concatenate([head, points], axis=1))
        return math.fsum(weights * values) * lead.weights[index]

    workers = threads if threads is not None else get_settings().threads
    if workers <= 1 or len(lead) == 1:
        partials = [chunk(i) for i in range(len(lead))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(chunk, range(len(lead))))
    return math.fsum(partials)


def refine(evaluate: Callable[[int], float], cfg: QuadratureConfig, label: str = "integral",
           abs_tol: Optional[float] = None) -> Tuple[float, float]:
    """Double the per-dimension node count until two levels agree.

    Two levels agree when their change is within cfg.rel_tol * |value| +
    abs_tol (default cfg.abs_tol). Returns (value, error estimate); raises
    ConvergenceError with the last estimate once cfg.max_refinements
    doublings fail.
    """
    floor = cfg.abs_tol if abs_tol is None else abs_tol
    history = [evaluate(cfg.nodes_per_dim)]
    result = (history[0], math.inf)

    for attempt in Retrying(
        stop=stop_after_attempt(cfg.max_refinements),
        retry=retry_if_exception_type(ConvergenceError),
        reraise=True,
    ):
        with attempt:
            level = attempt.retry_state.attempt_number
            nodes = cfg.nodes_per_dim * 2 ** level
            value = evaluate(nodes)
            error = abs(value - history[-1])
            history.append(value)
            logger.debug(f"{label}: nodes={nodes} value={value:.16g} change={error:.3e}")
            if not np.isfinite(value) or error > cfg.rel_tol * abs(value) + floor:
                raise ConvergenceError(
                    f"{label} did not converge at {nodes} nodes per dimension (change {error:.3e})",
                    estimate=value,
                    error=error,
                )
            result = (value, error)
    return result
