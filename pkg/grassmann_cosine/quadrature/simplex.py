"""
Integration over ordered simplices

t-simplex: upper >= x_1 >= x_2 >= ... >= x_k >= 0, nested Gauss-Legendre
through x_1 = upper*s_1, x_j = x_(j-1)*s_j. Suited to smooth integrands.

u-simplex: 0 <= u_1 <= ... <= u_p <= 1 with algebraic endpoint behaviour,
split by how many coordinates lie below 1/2. Coordinates below 1/2 are
chained from 0, the others are chained from 1 through v = 1 - u, and each
link variable carries a Gauss-Jacobi weight with a caller-given exponent.
"""
import logging
from typing import Callable, Optional, Sequence

import numpy as np

from .rules import gauss_jacobi_power, gauss_legendre
from .tensor import tensor_integral

logger = logging.getLogger("quadrature.simplex")


def t_simplex_integral(func: Callable[[np.ndarray], np.ndarray], dim: int, upper: float,
                       nodes: int, threads: Optional[int] = None) -> float:
    """Integral of func over the ordered simplex; func gets (m, dim) points, largest first."""
    if dim == 0:
        return float(np.asarray(func(np.zeros((1, 0))))[0])

    def mapped(s: np.ndarray) -> np.ndarray:
        x = np.empty_like(s)
        jac = np.full(s.shape[0], float(upper))
        x[:, 0] = upper * s[:, 0]
        for j in range(1, dim):
            jac = jac * x[:, j - 1]
            x[:, j] = x[:, j - 1] * s[:, j]
        return func(x) * jac

    return tensor_integral(mapped, [gauss_legendre(nodes)] * dim, threads)


def _chain(links: np.ndarray) -> tuple:
    """Ascending chain c_k = c_(k+1) * links_k from c_last = links_last / 2, with its Jacobian."""
    count = links.shape[1]
    chain = np.empty_like(links)
    jac = np.full(links.shape[0], 0.5)
    current = 0.5 * links[:, count - 1]
    chain[:, count - 1] = current
    for i in range(count - 2, -1, -1):
        jac = jac * current
        current = current * links[:, i]
        chain[:, i] = current
    return chain, jac


def u_simplex_integral(func: Callable[[np.ndarray, np.ndarray], np.ndarray], p: int,
                       lower_exponents: Sequence[float], upper_exponents: Sequence[float],
                       nodes: int, threads: Optional[int] = None) -> float:
    """Integral over 0 <= u_1 <= ... <= u_p <= 1 of func(u, 1 - u).

    lower_exponents[k-1] is the power of the k-th link of the chain from 0
    (the one shared by the k smallest coordinates); upper_exponents likewise
    for the chain from 1. func must return the full integrand; the link
    monomials are divided out before the Gauss-Jacobi weights are applied.
    """
    total = 0.0
    for r in range(p + 1):
        s = p - r
        alphas = list(lower_exponents[:r])
        gammas = list(upper_exponents[:s])
        rules = [gauss_jacobi_power(nodes, a) for a in alphas + gammas]

        def piece(points: np.ndarray, r=r, s=s, alphas=alphas, gammas=gammas) -> np.ndarray:
            m = points.shape[0]
            u = np.empty((m, p))
            v = np.empty((m, p))
            jac = np.ones(m)
            monomial = np.ones(m)
            if r:
                y = points[:, :r]
                low, jl = _chain(y)
                u[:, :r] = low
                v[:, :r] = 1.0 - low
                jac = jac * jl
                monomial = monomial * np.prod(y ** np.asarray(alphas), axis=1)
            if s:
                z = points[:, r:]
                w, ju = _chain(z)
                # w ascends while u descends: u_(r+1) pairs with the largest w
                v[:, r:] = w[:, ::-1]
                u[:, r:] = 1.0 - w[:, ::-1]
                jac = jac * ju
                monomial = monomial * np.prod(z ** np.asarray(gammas), axis=1)
            return func(u, v) * jac / monomial

        part = tensor_integral(piece, rules, threads)
        logger.debug(f"u-simplex piece r={r}: {part:.16g}")
        total += part
    return total
