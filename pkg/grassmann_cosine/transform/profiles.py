"""
L-invariant functions on Gr(p, K^n) described by their polar profiles
"""
import logging
from typing import Callable, Optional

import numpy as np

from ..core.exceptions import DomainError, SpecMismatch
from ..domain.value_objects import GrassmannianSpec
from ..manifold.frames import Subspace
from ..manifold.geometry import principal_cosines

logger = logging.getLogger("transform.profiles")

AngleFunction = Callable[[np.ndarray], np.ndarray]


class InvariantFunction:
    """Profile t -> f(exp Y(t) beta), evaluated on stacks of angle vectors.

    Profiles are expected to be pi-periodic and even in every angle. An
    optional subspace function is used by the Monte Carlo routes in place of
    the profile.
    """

    def __init__(self, p: int, eval_t: AngleFunction, name: str = "f",
                 eval_subspace: Optional[Callable[[Subspace], float]] = None):
        if p < 1:
            raise DomainError("Profiles need at least one angle")
        self.p = p
        self.name = name
        self._eval_t = eval_t
        self.eval_subspace = eval_subspace

    def __call__(self, t) -> np.ndarray:
        angles = np.asarray(t, dtype=float)
        if angles.shape[-1:] != (self.p,):
            raise SpecMismatch(f"Profile {self.name} takes {self.p} angles, got shape {angles.shape}")
        return np.asarray(self._eval_t(angles), dtype=float)

    def value_at(self, t) -> float:
        return float(self(np.asarray(t, dtype=float).reshape(self.p)))

    def funk_value(self) -> float:
        """f(pi/2, ..., pi/2)"""
        return self.value_at(np.full(self.p, 0.5 * np.pi))

    def pinned(self, m: int) -> "InvariantFunction":
        """Profile of the remaining p - m angles with t_1 = ... = t_m = pi/2."""
        if not 0 <= m < self.p:
            raise DomainError(f"Cannot pin {m} of {self.p} angles")
        if m == 0:
            return self

        def restricted(t: np.ndarray) -> np.ndarray:
            head = np.full(t.shape[:-1] + (m,), 0.5 * np.pi)
            return self(np.concatenate([head, t], axis=-1))

        return InvariantFunction(self.p - m, restricted, name=f"{self.name}|pin{m}")

    def on_frames(self, spec: GrassmannianSpec, frames: np.ndarray, reference: Subspace) -> np.ndarray:
        """Values on a stack of frames, angles measured against reference."""
        if spec.p != self.p:
            raise SpecMismatch(f"Profile {self.name} has {self.p} angles, {spec} has rank {spec.p}")
        if self.eval_subspace is not None:
            return np.array([self.eval_subspace(Subspace(spec, frame)) for frame in frames])
        # principal cosines come smallest first, i.e. angles largest first
        angles = np.arccos(principal_cosines(spec, frames, reference.frame))
        return self(angles)

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, p={self.p})"


class PolynomialProfile(InvariantFunction):
    """Polynomial in c_i = cos^2 t_i"""

    def __init__(self, p: int, expression: str, evaluator: Callable[[np.ndarray], np.ndarray],
                 name: Optional[str] = None):
        self.expression = expression
        self._evaluator = evaluator
        super().__init__(p, self._from_angles, name=name or expression)

    def _from_angles(self, t: np.ndarray) -> np.ndarray:
        return self.in_cos2(np.cos(t) ** 2)

    def in_cos2(self, c: np.ndarray) -> np.ndarray:
        """Evaluate directly on c = (cos^2 t_1, ..., cos^2 t_p)."""
        c = np.asarray(c, dtype=float)
        return np.broadcast_to(np.asarray(self._evaluator(c), dtype=float), c.shape[:-1]).copy()
