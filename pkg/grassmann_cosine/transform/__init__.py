"""Cosine-lambda transform: quadrature, Monte Carlo, continuation, partial Funk transforms"""
from .profiles import InvariantFunction, PolynomialProfile
from .expression import ProfileParser
from .factory import ProfileFactory, profile_factory
from .cosine import (
    cosine_quadrature,
    continued_transform,
    continued_transform_with_error,
    constant_profile,
    unit_mass,
)
from .montecarlo import cosine_montecarlo
from .continuation import ac_gamma_C, ac_gamma_C_report, ContinuationReport
from .funk import partial_funk, funk_evaluate, funk_evaluate_subspace, funk_exponent
