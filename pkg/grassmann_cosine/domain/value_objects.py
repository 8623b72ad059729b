"""
Value objects for the Grassmannian domain model
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple, Union

import numpy as np

from ..core.exceptions import DomainError


class FieldKind(Enum):
    """Scalar field of the Grassmannian"""
    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"

    @property
    def d(self) -> int:
        """Real dimension of the field"""
        return {FieldKind.REAL: 1, FieldKind.COMPLEX: 2, FieldKind.QUATERNION: 4}[self]

    @property
    def symbol(self) -> str:
        return {FieldKind.REAL: "R", FieldKind.COMPLEX: "C", FieldKind.QUATERNION: "H"}[self]

    @classmethod
    def parse(cls, value: Union[str, "FieldKind"]) -> "FieldKind":
        """Accept R/C/H, real/complex/quaternion or an existing member."""
        if isinstance(value, FieldKind):
            return value
        aliases = {
            "r": cls.REAL, "real": cls.REAL,
            "c": cls.COMPLEX, "complex": cls.COMPLEX,
            "h": cls.QUATERNION, "quaternion": cls.QUATERNION, "q": cls.QUATERNION,
        }
        key = str(value).strip().lower()
        if key not in aliases:
            raise DomainError(f"Unknown field '{value}'. Use one of R, C, H")
        return aliases[key]


@dataclass(frozen=True)
class GrassmannianSpec:
    """Ambient data of Gr(p, K^n) with n = p + q"""
    p: int
    q: int
    field: FieldKind = FieldKind.REAL

    def __post_init__(self):
        if not isinstance(self.field, FieldKind):
            object.__setattr__(self, "field", FieldKind.parse(self.field))
        if int(self.p) != self.p or int(self.q) != self.q:
            raise DomainError("p and q must be integers")
        if not 1 <= self.p <= self.q:
            raise DomainError(f"Need 1 <= p <= q, got p={self.p}, q={self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def is_quaternion(self) -> bool:
        return self.field is FieldKind.QUATERNION

    @property
    def embed_factor(self) -> int:
        """Rows/columns per field dimension in the complex model (2 for H)."""
        return 2 if self.is_quaternion else 1

    @property
    def dtype(self):
        return np.float64 if self.field is FieldKind.REAL else np.complex128

    @property
    def is_square(self) -> bool:
        """p = q over R: the Weyl group is of type D and m_p may be negative."""
        return self.p == self.q and self.d == 1

    def lower_rank(self, m: int = 1) -> "GrassmannianSpec":
        """Gr(p - m, K^{n - 2m}); keeps q - p fixed."""
        if not 1 <= m < self.p:
            raise DomainError(f"Cannot drop {m} from rank {self.p}")
        return GrassmannianSpec(self.p - m, self.q - m, self.field)

    def __str__(self):
        return f"Gr({self.p},{self.field.symbol}^{self.n})"


@dataclass(frozen=True)
class AngleCoords:
    """Point t = (t_1, ..., t_p) of the fundamental domain 0 <= t_p <= ... <= t_1 <= pi/2"""
    t: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in np.atleast_1d(np.asarray(self.t, dtype=float)))
        object.__setattr__(self, "t", values)
        if not values:
            raise DomainError("AngleCoords needs at least one angle")
        tol = 1e-12
        if values[-1] < -tol or values[0] > math.pi / 2 + tol:
            raise DomainError(f"Angles {values} leave [0, pi/2]")
        if any(a < b - tol for a, b in zip(values, values[1:])):
            raise DomainError(f"Angles {values} are not non-increasing")

    @classmethod
    def reduce(cls, t: Iterable[float]) -> "AngleCoords":
        """Fold an arbitrary real vector into the fundamental domain."""
        folded = np.arccos(np.clip(np.abs(np.cos(np.asarray(list(t), dtype=float))), 0.0, 1.0))
        return cls(tuple(np.sort(folded)[::-1]))

    @property
    def p(self) -> int:
        return len(self.t)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.t, dtype=float)

    def __str__(self):
        return "(" + ", ".join(f"{v:.6f}" for v in self.t) + ")"


@dataclass(frozen=True)
class HighestWeight:
    """Highest weight mu = (m_1, ..., m_p) of an L-spherical K-type"""
    m: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.m)
        if any(int(v) != v for v in self.m):
            raise DomainError(f"Weight entries must be integers: {self.m}")
        object.__setattr__(self, "m", values)
        if not values:
            raise DomainError("Empty weight")
        if any(v % 2 for v in values):
            raise DomainError(f"Spherical weights have even entries: {values}")
        if any(a < b for a, b in zip(values[:-1], values[1:-1])):
            raise DomainError(f"Weight {values} is not non-increasing")
        if len(values) > 1 and values[-2] < abs(values[-1]):
            raise DomainError(f"Weight {values} violates m_(p-1) >= |m_p|")
        if len(values) == 1 and values[0] < 0:
            raise DomainError(f"Weight {values} must be non-negative")

    @classmethod
    def zero(cls, p: int) -> "HighestWeight":
        return cls((0,) * p)

    @property
    def p(self) -> int:
        return len(self.m)

    @property
    def degree(self) -> int:
        """|mu| = sum of the entries"""
        return sum(self.m)

    @property
    def half(self) -> Tuple[int, ...]:
        """mu / 2, the partition indexing the zonal polynomial in u = cos^2 t"""
        return tuple(v // 2 for v in self.m)

    @property
    def is_zero(self) -> bool:
        return not any(self.m)

    def check_for(self, spec: GrassmannianSpec) -> None:
        """Raise DomainError unless this weight is spherical for spec."""
        if self.p != spec.p:
            raise DomainError(f"Weight {self.m} has length {self.p}, {spec} has rank {spec.p}")
        if self.m[-1] < 0 and not spec.is_square:
            raise DomainError(f"Negative m_p only occurs for p = q over R, not on {spec}")

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.m) + ")"


@dataclass(frozen=True)
class MeromorphicScalar:
    """A value together with its pole order at the evaluation point.

    pole_order > 0: value is the leading Laurent coefficient of a pole.
    pole_order = 0: value is the plain evaluation.
    pole_order < 0: value is the leading coefficient of a zero of that order.
    """
    value: float
    pole_order: int = 0

    @property
    def is_pole(self) -> bool:
        return self.pole_order > 0

    @property
    def is_zero(self) -> bool:
        return self.pole_order < 0 or self.value == 0.0

    def evaluate(self) -> float:
        """Value at the point itself."""
        if self.pole_order < 0:
            return 0.0
        if self.pole_order > 0:
            return math.copysign(math.inf, self.value) if self.value else math.inf
        return float(self.value)

    def reported(self) -> float:
        """Leading coefficient for poles, the value at the point otherwise."""
        return float(self.value) if self.pole_order > 0 else self.evaluate()

    def __str__(self):
        if self.pole_order > 0:
            return f"{self.value:.12g} (pole of order {self.pole_order})"
        if self.pole_order < 0:
            return f"0 (zero of order {-self.pole_order})"
        return f"{self.value:.12g}"
