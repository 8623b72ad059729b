"""
Orthonormal frames for Gr(p, K^n)

Real and complex subspaces are stored as n x p frames. A quaternionic matrix
Z1 + Z2 j is stored through its complex embedding [[Z1, Z2], [-conj Z2, conj Z1]],
so a quaternionic frame is a 2n x 2p complex matrix whose last p columns are
the J-partners of the first p.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg

from ..core.exceptions import DomainError, SpecMismatch
from ..domain.value_objects import FieldKind, GrassmannianSpec

logger = logging.getLogger("manifold.frames")

ORTHONORMAL_TOL = 1e-12
RANK_TOL = 1e-10


def quaternion_embed(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    """Complex embedding of Z1 + Z2 j (works on stacks of matrices)."""
    z1 = np.asarray(z1, dtype=np.complex128)
    z2 = np.asarray(z2, dtype=np.complex128)
    top = np.concatenate([z1, z2], axis=-1)
    bottom = np.concatenate([-np.conj(z2), np.conj(z1)], axis=-1)
    return np.concatenate([top, bottom], axis=-2)


def quaternion_blocks(embedded: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Inverse of quaternion_embed: returns (Z1, Z2)."""
    rows = embedded.shape[-2] // 2
    cols = embedded.shape[-1] // 2
    return embedded[..., :rows, :cols], embedded[..., :rows, cols:]


def j_partner(vectors: np.ndarray) -> np.ndarray:
    """Apply the antilinear map J to columns of length 2n (last-but-one axis)."""
    half = vectors.shape[-2] // 2
    x = vectors[..., :half, :]
    y = vectors[..., half:, :]
    return np.concatenate([-np.conj(y), np.conj(x)], axis=-2)


def fix_column_phases(frame: np.ndarray, tol: float = 1e-14) -> np.ndarray:
    """Make the first non-negligible entry of every column real and positive."""
    magnitudes = np.abs(frame)
    first = np.argmax(magnitudes > tol, axis=-2)
    pivots = np.take_along_axis(frame, first[..., None, :], axis=-2)
    scale = np.abs(pivots)
    phases = np.where(scale > 0, pivots / np.where(scale > 0, scale, 1.0), 1.0)
    return frame * np.conj(phases)


def quaternion_gram_schmidt(columns: np.ndarray) -> np.ndarray:
    """Quaternionic Gram-Schmidt on the first-half columns of an embedding.

    Args:
        columns: array (..., 2n, p) holding the p quaternionic columns in
            embedded form (the J-partners are implied).

    Returns:
        Embedded orthonormal frame (..., 2n, 2p), columns [E, J E].
    """
    columns = np.asarray(columns, dtype=np.complex128)
    p = columns.shape[-1]
    basis = []
    for j in range(p):
        v = columns[..., :, j]
        # two passes of modified Gram-Schmidt against e_i and J e_i
        for _ in range(2):
            for e in basis:
                je = j_partner(e[..., :, None])[..., :, 0]
                v = v - e * np.sum(np.conj(e) * v, axis=-1, keepdims=True)
                v = v - je * np.sum(np.conj(je) * v, axis=-1, keepdims=True)
        norm = np.linalg.norm(v, axis=-1, keepdims=True)
        if np.any(norm < RANK_TOL):
            raise DomainError("Quaternionic frame is rank deficient")
        basis.append(v / norm)
    e = np.stack(basis, axis=-1)
    return np.concatenate([e, j_partner(e)], axis=-1)


def orthonormalize(spec: GrassmannianSpec, matrix: np.ndarray) -> np.ndarray:
    """Orthonormal frame spanning the columns of matrix.

    Real and complex frames go through a column-pivoted QR (rank revealing)
    followed by phase fixing; quaternionic frames through quaternionic
    Gram-Schmidt.
    """
    matrix = np.asarray(matrix)
    if spec.is_quaternion:
        expected = (2 * spec.n, 2 * spec.p)
        if matrix.shape != expected:
            raise SpecMismatch(f"Quaternionic frame for {spec} must be {expected}, got {matrix.shape}")
        return quaternion_gram_schmidt(matrix[:, :spec.p])

    expected = (spec.n, spec.p)
    if matrix.shape != expected:
        raise SpecMismatch(f"Frame for {spec} must be {expected}, got {matrix.shape}")
    q, r, perm = scipy.linalg.qr(matrix.astype(spec.dtype), mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag[0] == 0 or diag[-1] < RANK_TOL * diag[0]:
        raise DomainError(f"Matrix does not have rank {spec.p}")
    return fix_column_phases(q)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Element of Gr(p, K^n) held as an orthonormal frame"""
    spec: GrassmannianSpec
    frame: np.ndarray

    def __post_init__(self):
        frame = np.asarray(self.frame)
        factor = self.spec.embed_factor
        expected = (factor * self.spec.n, factor * self.spec.p)
        if frame.shape != expected:
            raise SpecMismatch(f"Frame shape {frame.shape} does not fit {self.spec} (expected {expected})")
        if self.spec.field is FieldKind.REAL:
            if np.iscomplexobj(frame):
                if np.max(np.abs(frame.imag)) > ORTHONORMAL_TOL:
                    raise DomainError("Real subspace with complex frame")
                frame = frame.real
            frame = frame.astype(np.float64)
        else:
            frame = frame.astype(np.complex128)
        gram = frame.conj().T @ frame
        defect = np.max(np.abs(gram - np.eye(expected[1])))
        if defect > ORTHONORMAL_TOL:
            raise DomainError(f"Frame is not orthonormal (defect {defect:.3e})")
        frame.setflags(write=False)
        object.__setattr__(self, "frame", frame)

    @classmethod
    def from_matrix(cls, spec: GrassmannianSpec, matrix: np.ndarray) -> "Subspace":
        """Span of the columns of an arbitrary full-rank matrix."""
        return cls(spec, orthonormalize(spec, matrix))

    def apply(self, unitary: np.ndarray) -> "Subspace":
        """k . sigma for a unitary k of the ambient space."""
        return Subspace(self.spec, np.asarray(unitary) @ self.frame)

    def projector(self) -> np.ndarray:
        return self.frame @ self.frame.conj().T

    def __repr__(self):
        return f"Subspace({self.spec})"
