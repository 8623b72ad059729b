"""
Haar sampling on Gr(p, K^n), on U(n, K) and on L = S(U(p) x U(q))

Every sampler takes its seed explicitly. Batched draws derive an independent
stream per batch from numpy's SeedSequence, so splitting work over threads
never changes the numbers.
"""
import logging
from typing import Optional

import numpy as np

from ..domain.value_objects import FieldKind, GrassmannianSpec
from .frames import (
    Subspace,
    fix_column_phases,
    quaternion_blocks,
    quaternion_embed,
    quaternion_gram_schmidt,
)

logger = logging.getLogger("manifold.sampling")


def rng_for(seed: int, stream: Optional[int] = None) -> np.random.Generator:
    """Generator for seed, or for the stream-th child of seed."""
    if stream is None:
        return np.random.default_rng(np.random.SeedSequence(seed))
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(int(stream),)))


def _gaussian(rng: np.random.Generator, field: FieldKind, shape) -> np.ndarray:
    """Standard Gaussian entries over the field (complex embedding for H)."""
    if field is FieldKind.REAL:
        return rng.standard_normal(shape)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    if field is FieldKind.COMPLEX:
        return z
    w = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    return quaternion_embed(z, w)


def haar_sample(spec: GrassmannianSpec, seed: int) -> Subspace:
    """Haar-distributed subspace: orthonormalized Gaussian n x p matrix."""
    rng = rng_for(seed)
    return Subspace.from_matrix(spec, _gaussian(rng, spec.field, (spec.n, spec.p)))


def haar_batch(spec: GrassmannianSpec, seed: int, count: int, stream: Optional[int] = None) -> np.ndarray:
    """count Haar frames stacked as (count, N, P).

    Real and complex frames come from numpy's stacked QR, quaternionic frames
    from stacked quaternionic Gram-Schmidt.
    """
    rng = rng_for(seed, stream)
    gauss = _gaussian(rng, spec.field, (count, spec.n, spec.p))
    if spec.is_quaternion:
        return quaternion_gram_schmidt(gauss[..., :spec.p])
    q, _ = np.linalg.qr(gauss)
    return fix_column_phases(q)


def _haar_group(rng: np.random.Generator, field: FieldKind, size: int) -> np.ndarray:
    """Haar element of O(size), U(size) or Sp(size) (2size x 2size embedding)."""
    gauss = _gaussian(rng, field, (size, size))
    if field is FieldKind.QUATERNION:
        return quaternion_gram_schmidt(gauss[:, :size])
    q, r = np.linalg.qr(gauss)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def haar_unitary(spec: GrassmannianSpec, seed: int) -> np.ndarray:
    """Haar element k of the full isometry group of K^n."""
    return _haar_group(rng_for(seed), spec.field, spec.n)


def l_sample(spec: GrassmannianSpec, seed: int) -> np.ndarray:
    """Haar element of L = S(U(p) x U(q)) acting on K^n.

    For R and C the determinant condition is met by rescaling the last column
    of the q-block; quaternionic blocks already have determinant 1.
    """
    rng = rng_for(seed)
    a = _haar_group(rng, spec.field, spec.p)
    b = _haar_group(rng, spec.field, spec.q)
    if spec.is_quaternion:
        a1, a2 = quaternion_blocks(a)
        b1, b2 = quaternion_blocks(b)
        z1 = np.zeros((spec.n, spec.n), dtype=np.complex128)
        z2 = np.zeros_like(z1)
        z1[:spec.p, :spec.p], z1[spec.p:, spec.p:] = a1, b1
        z2[:spec.p, :spec.p], z2[spec.p:, spec.p:] = a2, b2
        return quaternion_embed(z1, z2)

    det = np.linalg.det(a) * np.linalg.det(b)
    b = b.copy()
    b[:, -1] = b[:, -1] * np.conj(det / abs(det))
    block = np.zeros((spec.n, spec.n), dtype=spec.dtype)
    block[:spec.p, :spec.p] = a
    block[spec.p:, spec.p:] = b
    logger.debug(f"l_sample {spec} seed={seed}")
    return block
