"""Zonal spherical function oracle for rank p <= 2"""
from .basis import (
    ZonalBasis,
    ZonalEntry,
    build_zonal_basis,
    eigenvalue_numeric,
    monomial_symmetric,
    u_form_integral,
)
