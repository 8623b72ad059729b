"""Special functions: multivariate gamma, normalizer, pole orders, densities"""
from .gamma import (
    LaurentLedger,
    gamma_pd,
    gamma_pd_arguments,
    normalizer_gamma,
    pole_order_C,
    pole_set,
)
from .densities import density_delta, density_nu, nu_exponent
