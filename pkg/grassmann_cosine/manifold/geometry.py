"""
Polar coordinates and principal angles on Gr(p, K^n)
"""
import logging
from typing import Sequence, Union

import numpy as np

from ..core.exceptions import DomainError, SpecMismatch
from ..domain.value_objects import AngleCoords, GrassmannianSpec
from .frames import Subspace, quaternion_embed

logger = logging.getLogger("manifold.geometry")

# singular values of a quaternionic cross product come in equal pairs
PAIR_GAP = 1e-8


def base_point(spec: GrassmannianSpec) -> Subspace:
    """beta = span(e_1, ..., e_p)"""
    frame = np.eye(spec.n, spec.p)
    if spec.is_quaternion:
        frame = quaternion_embed(frame, np.zeros_like(frame))
    return Subspace(spec, frame)


def exp_coords(spec: GrassmannianSpec, t: Union[AngleCoords, Sequence[float], np.ndarray]) -> Subspace:
    """exp Y(t) . beta: column j is cos(t_j) e_j + sin(t_j) e_(n+1-j)."""
    angles = t.as_array() if isinstance(t, AngleCoords) else np.asarray(t, dtype=float).ravel()
    if angles.shape != (spec.p,):
        raise SpecMismatch(f"Need {spec.p} angles for {spec}, got {angles.shape[0]}")
    frame = np.zeros((spec.n, spec.p))
    cols = np.arange(spec.p)
    frame[cols, cols] = np.cos(angles)
    frame[spec.n - 1 - cols, cols] += np.sin(angles)
    if spec.is_quaternion:
        frame = quaternion_embed(frame, np.zeros_like(frame))
    return Subspace(spec, frame)


def principal_cosines(spec: GrassmannianSpec, frames: np.ndarray, other: np.ndarray) -> np.ndarray:
    """Cosines of the principal angles, ascending, for one frame or a stack.

    Args:
        frames: (..., N, P) frames of the first subspaces
        other: (N, P) frame of the second subspace

    Returns:
        (..., p) array of cosines in [0, 1], smallest first
    """
    cross = np.asarray(other).conj().T @ np.asarray(frames)
    singular = np.linalg.svd(cross, compute_uv=False)
    # numpy returns singular values in descending order
    singular = np.clip(singular[..., ::-1], 0.0, 1.0)
    if spec.is_quaternion:
        first, second = singular[..., 0::2], singular[..., 1::2]
        gap = np.max(np.abs(first - second)) if first.size else 0.0
        if gap > PAIR_GAP:
            logger.warning(f"Quaternionic singular values not paired (gap {gap:.3e})")
        singular = 0.5 * (first + second)
    return singular


def _check_same_spec(a: Subspace, b: Subspace) -> None:
    if a.spec != b.spec:
        raise SpecMismatch(f"Subspaces live on different Grassmannians: {a.spec} vs {b.spec}")


def principal_angles(a: Subspace, b: Subspace) -> np.ndarray:
    """arccos of the singular values of b* a, sorted descending."""
    _check_same_spec(a, b)
    return np.arccos(principal_cosines(a.spec, a.frame, b.frame))


def cos_between(a: Subspace, b: Subspace) -> float:
    """|Cos(a, b)| as the product of principal cosines."""
    _check_same_spec(a, b)
    return float(np.prod(principal_cosines(a.spec, a.frame, b.frame)))


def cos_vanishes(a: Subspace, b: Subspace, tol: float = 1e-12) -> bool:
    """True iff a contains a vector orthogonal to b (a in Z(b))."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    _check_same_spec(a, b)
    return bool(principal_cosines(a.spec, a.frame, b.frame)[0] < tol)
