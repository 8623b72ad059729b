"""Quadrature engines: 1-D rules, tensor products, simplices, extrapolation"""
from .rules import (
    Rule1D,
    gauss_legendre,
    gauss_jacobi_power,
    tanh_sinh,
    continued_power_rule,
    power_rule,
    is_power_pole,
)
from .tensor import tensor_integral, refine
from .simplex import t_simplex_integral, u_simplex_integral
from .extrapolation import ExtrapolationResult, extrapolate_to_zero, limit_coeffs
