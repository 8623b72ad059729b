"""
Configuration models shared by the engines and the CLI
"""
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.exceptions import ConfigurationException
from .value_objects import FieldKind, GrassmannianSpec
from ..config.settings import get_settings


class QuadratureScheme(str, Enum):
    """One-dimensional rule used along each radial coordinate"""
    GAUSS_JACOBI = "gauss_jacobi"
    GAUSS_LEGENDRE = "gauss_legendre"
    TANH_SINH = "tanh_sinh"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


DEFAULT_EPSILONS: Tuple[float, ...] = (0.2, 0.1, 0.05, 0.025, 0.0125)


class QuadratureConfig(BaseModel):
    """Quadrature and extrapolation parameters"""

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    nodes_per_dim: int = Field(default=24, ge=8)
    scheme: QuadratureScheme = QuadratureScheme.GAUSS_JACOBI
    rel_tol: float = Field(default=1e-10, gt=0)
    abs_tol: float = Field(default=1e-14, ge=0)
    max_refinements: int = Field(default=3, ge=1)
    # a.c. limits: lam = lam0 + eps over this ladder
    extrapolation_epsilons: Tuple[float, ...] = DEFAULT_EPSILONS
    extrapolation_degree: int = Field(default=3, ge=1)
    extrapolation_rel_tol: float = Field(default=1e-3, gt=0)
    # nodes of the product-integration block of continued power rules
    continuation_nodes: int = Field(default=12, ge=4, le=20)

    @field_validator("extrapolation_epsilons")
    @classmethod
    def _check_ladder(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        value = tuple(float(v) for v in value)
        if not value:
            raise ValueError("extrapolation_epsilons must not be empty")
        if any(v <= 0 for v in value):
            raise ValueError("extrapolation_epsilons must be positive")
        if any(a <= b for a, b in zip(value, value[1:])):
            raise ValueError("extrapolation_epsilons must be strictly decreasing")
        return value

    @classmethod
    def from_settings(cls, **overrides: Any) -> "QuadratureConfig":
        """Defaults taken from the environment (GCT_NODES_PER_DIM, GCT_REL_TOL, ...)."""
        current = get_settings()
        values: Dict[str, Any] = {
            "nodes_per_dim": current.nodes_per_dim,
            "rel_tol": current.rel_tol,
            "max_refinements": current.max_refinements,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class RunConfig(BaseModel):
    """Fully serializable description of one CLI run"""

    command: str
    p: Optional[int] = Field(default=None, ge=1)
    q: Optional[int] = Field(default=None, ge=1)
    field: str = "R"
    seed: int = 0
    output_format: OutputFormat = OutputFormat.CSV
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    params: Dict[str, Any] = Field(default_factory=dict)
    threads: Optional[int] = None

    @field_validator("field")
    @classmethod
    def _normalize_field(cls, value: str) -> str:
        return FieldKind.parse(value).symbol

    def spec(self) -> GrassmannianSpec:
        if self.p is None or self.q is None:
            raise ConfigurationException(f"Command {self.command} was configured without p and q")
        return GrassmannianSpec(self.p, self.q, FieldKind.parse(self.field))
