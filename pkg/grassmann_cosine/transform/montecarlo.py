"""
Cosine-lambda transform by Monte Carlo over Haar-distributed subspaces
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from ..config.settings import get_settings
from ..core.exceptions import DomainError
from ..domain.value_objects import GrassmannianSpec
from ..manifold.frames import Subspace
from ..manifold.geometry import base_point, principal_cosines
from ..manifold.sampling import haar_batch
from .profiles import InvariantFunction

logger = logging.getLogger("transform.montecarlo")

SubspaceFunction = Callable[[Subspace], float]


def _values_on(spec: GrassmannianSpec, f: Union[InvariantFunction, SubspaceFunction],
               frames: np.ndarray, reference: Subspace) -> np.ndarray:
    if isinstance(f, InvariantFunction):
        return f.on_frames(spec, frames, reference)
    return np.array([f(Subspace(spec, frame)) for frame in frames], dtype=float)


def batch_layout(n: int, batch_size: int):
    """Sizes of the fixed batches covering n samples."""
    full, rest = divmod(n, batch_size)
    return [batch_size] * full + ([rest] if rest else [])


def mean_and_stderr(sums, sums_sq, n: int) -> Tuple[float, float]:
    """Combine per-batch sums in batch order."""
    total = math.fsum(sums)
    mean = total / n
    if n < 2:
        return mean, math.inf
    variance = max((math.fsum(sums_sq) - n * mean * mean) / (n - 1), 0.0)
    return mean, math.sqrt(variance / n)


def cosine_montecarlo(spec: GrassmannianSpec, f: Union[InvariantFunction, SubspaceFunction], lam: float,
                      omega: Optional[Subspace], n: int, seed: int,
                      reference: Optional[Subspace] = None,
                      batch_size: Optional[int] = None,
                      threads: Optional[int] = None) -> Tuple[float, float]:
    """Sample mean of |Cos(X, omega)|^(d lam) f(X) over n Haar draws, with its standard error.

    Profiles are evaluated from the principal angles against reference
    (default: the base point). Batch b draws from the b-th child stream of
    seed, so the result is the same for every thread count.
    """
    if spec.d * lam <= -1.0:
        raise DomainError(f"C^lam needs d*lam > -1, got d*lam = {spec.d * lam:g}")
    if n < 1:
        raise DomainError("Monte Carlo needs at least one sample")
    current = get_settings()
    omega = omega if omega is not None else base_point(spec)
    reference = reference if reference is not None else base_point(spec)
    sizes = batch_layout(n, batch_size or current.mc_batch_size)
    power = spec.d * lam

    def run_batch(index: int) -> Tuple[float, float]:
        frames = haar_batch(spec, seed, sizes[index], stream=index)
        kernel = np.prod(principal_cosines(spec, frames, omega.frame), axis=-1) ** power
        values = kernel * _values_on(spec, f, frames, reference)
        return math.fsum(values), math.fsum(values * values)

    workers = threads if threads is not None else current.threads
    progress = dict(total=len(sizes), desc="monte carlo", disable=not current.show_progress, leave=False)
    if workers <= 1:
        parts = [run_batch(i) for i in tqdm(range(len(sizes)), **progress)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(tqdm(pool.map(run_batch, range(len(sizes))), **progress))

    mean, stderr = mean_and_stderr([s for s, _ in parts], [q for _, q in parts], n)
    logger.debug(f"MC C^{lam:g} on {spec}: {mean:.10g} +- {stderr:.3g} ({n} samples, {len(sizes)} batches)")
    return mean, stderr
