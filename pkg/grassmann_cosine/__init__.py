"""
Grassmann Cosine Transform
Cosine-lambda transforms on Grassmann manifolds, their K-spectrum and the
partial Funk transforms obtained at the poles
"""

__version__ = "1.0.0"
__author__ = "Grassmann Cosine Team"

from .core.exceptions import (
    GrassmannCosineException,
    SpecMismatch,
    DomainError,
    ConvergenceError,
    IllConditioned,
    ProfileParseError,
)
from .domain.value_objects import (
    FieldKind,
    GrassmannianSpec,
    AngleCoords,
    HighestWeight,
    MeromorphicScalar,
)
from .domain.models import QuadratureConfig, QuadratureScheme, RunConfig
