"""Domain model: value objects and configuration models"""
from .value_objects import (
    FieldKind,
    GrassmannianSpec,
    AngleCoords,
    HighestWeight,
    MeromorphicScalar,
)
from .models import QuadratureConfig, QuadratureScheme, RunConfig, OutputFormat
