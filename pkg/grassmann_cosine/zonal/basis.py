"""
Zonal spherical functions for rank p <= 2 and numerically measured eigenvalues

Zonal functions are symmetric polynomials in u = (cos^2 t_1, ..., cos^2 t_p).
They are obtained by Gram-Schmidt on monomial symmetric functions m_kappa,
kappa = mu/2, taken in order of (|kappa|, lex), under the invariant weight
prod u_i^((d-2)/2) nu_0^p(u) on the ordered simplex 0 <= u_1 <= ... <= u_p <= 1.
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..core.exceptions import DomainError, IllConditioned
from ..domain.models import QuadratureConfig
from ..domain.value_objects import GrassmannianSpec, HighestWeight
from ..quadrature.simplex import u_simplex_integral
from ..quadrature.tensor import refine
from ..specfun.densities import density_nu, nu_exponent
from ..spectrum.weights import enumerate_weights

logger = logging.getLogger("zonal.basis")

MAX_CONDITION = 1e12

Partition = Tuple[int, ...]


def monomial_symmetric(kappa: Partition, u: np.ndarray) -> np.ndarray:
    """m_kappa(u): sum of u^alpha over the distinct permutations alpha of kappa."""
    u = np.asarray(u, dtype=float)
    total = np.zeros(u.shape[:-1])
    for alpha in sorted(set(permutations(kappa))):
        total = total + np.prod(u ** np.asarray(alpha), axis=-1)
    return total


def u_form_exponents(spec: GrassmannianSpec, lam: float) -> Tuple[List[float], List[float]]:
    """Link exponents of the u-simplex chains from 0 and from 1."""
    d, b = spec.d, nu_exponent(spec)
    lower = [0.5 * d * k * (lam + k) - 1.0 for k in range(1, spec.p + 1)]
    upper = [k * b + k - 1.0 + 0.5 * d * k * (k - 1) for k in range(1, spec.p + 1)]
    return lower, upper


def u_form_integral(spec: GrassmannianSpec, g: Callable[[np.ndarray], np.ndarray], lam: float,
                    nodes: int, threads: Optional[int] = None) -> float:
    """integral over 0 <= u_1 <= ... <= u_p <= 1 of prod u_i^((d(lam+1)-2)/2) nu_0^p(u) g(u) du."""
    power = 0.5 * (spec.d * (lam + 1.0) - 2.0)
    lower, upper = u_form_exponents(spec, lam)

    def integrand(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        kernel = np.prod(u ** power, axis=-1)
        return kernel * density_nu(spec, 0, spec.p, u, complement=v) * g(u)

    return u_simplex_integral(integrand, spec.p, lower, upper, nodes, threads)


@dataclass
class ZonalEntry:
    weight: HighestWeight
    # coefficients over ZonalBasis.monomials
    coeffs: np.ndarray

    def evaluate(self, monomials: List[Partition], u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        total = np.zeros(u.shape[:-1])
        for c, kappa in zip(self.coeffs, monomials):
            if c != 0.0:
                total = total + c * monomial_symmetric(kappa, u)
        return total

    def majorant(self, monomials: List[Partition], u: np.ndarray) -> np.ndarray:
        """sum |c_kappa| m_kappa(u), the size of the terms that cancel in evaluate."""
        u = np.asarray(u, dtype=float)
        total = np.zeros(u.shape[:-1])
        for c, kappa in zip(self.coeffs, monomials):
            if c != 0.0:
                total = total + abs(c) * monomial_symmetric(kappa, u)
        return total


@dataclass
class ZonalBasis:
    spec: GrassmannianSpec
    monomials: List[Partition]
    entries: List[ZonalEntry]
    gram: np.ndarray = field(repr=False, default=None)

    def entry(self, mu: HighestWeight) -> ZonalEntry:
        for e in self.entries:
            if e.weight == mu:
                return e
        raise DomainError(f"Weight {mu} is not in the zonal basis of {self.spec}")

    def phi(self, mu: HighestWeight) -> Callable[[np.ndarray], np.ndarray]:
        """phi_mu as a function of u."""
        entry = self.entry(mu)
        return lambda u: entry.evaluate(self.monomials, u)

    def weights(self) -> List[HighestWeight]:
        return [e.weight for e in self.entries]

    def inner(self, a: HighestWeight, b: HighestWeight) -> float:
        """<phi_a, phi_b> under the invariant weight, from the stored Gram matrix."""
        ca, cb = self.entry(a).coeffs, self.entry(b).coeffs
        return float(ca @ self.gram @ cb)


def build_zonal_basis(spec: GrassmannianSpec, max_degree: int,
                      cfg: Optional[QuadratureConfig] = None) -> ZonalBasis:
    """Orthogonal zonal polynomials for every weight with m_1 <= max_degree and m_p >= 0."""
    cfg = cfg if cfg is not None else QuadratureConfig.from_settings()
    if spec.p > 2:
        raise DomainError(f"The zonal oracle supports p <= 2, got {spec}")
    if max_degree < 0 or max_degree % 2:
        raise DomainError(f"max_degree must be a non-negative even integer, got {max_degree}")

    weights = [w for w in enumerate_weights(spec, max_degree) if w.m[-1] >= 0]
    weights.sort(key=lambda w: (sum(w.half), w.half))
    monomials = [w.half for w in weights]
    size = len(monomials)

    gram = np.empty((size, size))
    for i in range(size):
        for j in range(i, size):
            ki, kj = monomials[i], monomials[j]

            def product(u, ki=ki, kj=kj):
                return monomial_symmetric(ki, u) * monomial_symmetric(kj, u)

            value, _ = refine(lambda n: u_form_integral(spec, product, 0.0, n), cfg,
                              label=f"gram {ki},{kj}")
            gram[i, j] = gram[j, i] = value

    condition = np.linalg.cond(gram)
    logger.debug(f"{spec}: zonal Gram matrix of size {size}, condition {condition:.3e}")
    if condition > MAX_CONDITION:
        raise IllConditioned(f"Gram matrix condition {condition:.3e} exceeds {MAX_CONDITION:.0e} on {spec}")

    lower = np.linalg.cholesky(gram)
    coeffs = np.linalg.inv(lower)
    ones = np.ones(spec.p)
    entries = []
    for row, w in zip(coeffs, weights):
        entry = ZonalEntry(weight=w, coeffs=row.copy())
        at_beta = float(entry.evaluate(monomials, ones))
        entry.coeffs = entry.coeffs / at_beta
        entries.append(entry)
    logger.info(f"Built {size} zonal functions on {spec} up to degree {max_degree}")
    return ZonalBasis(spec=spec, monomials=monomials, entries=entries, gram=gram)


def eigenvalue_numeric(spec: GrassmannianSpec, basis: ZonalBasis, mu: HighestWeight, lam: float,
                       cfg: Optional[QuadratureConfig] = None) -> float:
    """C^lam phi_mu(beta) measured by quadrature, with phi_mu(beta) = 1."""
    cfg = cfg if cfg is not None else QuadratureConfig.from_settings()
    if spec.d * lam <= -1.0:
        raise DomainError(f"Need d*lam > -1, got d*lam = {spec.d * lam:g}")
    if basis.spec != spec:
        raise DomainError(f"Basis built for {basis.spec}, not {spec}")
    phi = basis.phi(mu)
    entry = basis.entry(mu)
    one = lambda u: np.ones(u.shape[:-1])
    # eigenvalues that vanish are resolved relative to the cancelling terms
    scale = u_form_integral(spec, lambda u: entry.majorant(basis.monomials, u), lam, cfg.nodes_per_dim)
    num, _ = refine(lambda n: u_form_integral(spec, phi, lam, n), cfg, label=f"zonal {mu} at {lam:g}",
                    abs_tol=cfg.rel_tol * scale + cfg.abs_tol)
    den, _ = refine(lambda n: u_form_integral(spec, one, 0.0, n), cfg, label="zonal mass")
    return num / den
