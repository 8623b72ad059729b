"""
Closed-form K-spectrum of the cosine-lambda transform

eta_mu(lam) = (-1)^(|mu|/2) * Gamma_{p,d}(dn/2) / Gamma_{p,d}(dp/2)
              * Gamma_{p,d}((d lam + d p)/2) Gamma_{p,d}((-d lam + mu)/2)
              / (Gamma_{p,d}(-d lam/2) Gamma_{p,d}((d lam + d n + mu)/2))

All evaluations run through a LaurentLedger in the variable lam, so values at
poles and zeros come out as leading coefficients with their orders.
"""
import logging

import numpy as np

from ..domain.value_objects import GrassmannianSpec, HighestWeight, MeromorphicScalar
from ..specfun.gamma import LaurentLedger

logger = logging.getLogger("spectrum.eigenvalues")


def _sign(mu: HighestWeight) -> float:
    return -1.0 if (mu.degree // 2) % 2 else 1.0


def _constant(spec: GrassmannianSpec, ledger: LaurentLedger) -> LaurentLedger:
    p, d = spec.p, spec.d
    return ledger.multiply_pd(p, d, 0.5 * d * spec.n).divide_pd(p, d, 0.5 * d * p)


def _mu_block(spec: GrassmannianSpec, mu: HighestWeight, lam: float, ledger: LaurentLedger) -> LaurentLedger:
    """Gamma_{p,d}((-d lam + mu)/2) / (Gamma_{p,d}(-d lam/2) Gamma_{p,d}((d lam + d n + mu)/2))"""
    p, d = spec.p, spec.d
    m = np.asarray(mu.m, dtype=float)
    half = 0.5 * d
    ledger.multiply_pd(p, d, (-d * lam + m) / 2.0, slope=-half)
    ledger.divide_pd(p, d, -d * lam / 2.0, slope=-half)
    ledger.divide_pd(p, d, (d * lam + d * spec.n + m) / 2.0, slope=half)
    return ledger


def eta(spec: GrassmannianSpec, mu: HighestWeight, lam: float) -> MeromorphicScalar:
    """Eigenvalue of C^lam on the K-type mu."""
    mu.check_for(spec)
    ledger = _constant(spec, LaurentLedger())
    ledger.multiply_pd(spec.p, spec.d, 0.5 * spec.d * (lam + spec.p), slope=0.5 * spec.d)
    _mu_block(spec, mu, lam, ledger).scale(_sign(mu))
    return ledger.to_scalar()


def eta_ratio_ac(spec: GrassmannianSpec, mu: HighestWeight, lam0: float) -> MeromorphicScalar:
    """Continuation of eta_mu / eta_0 at lam0, with the gamma factors cancelled symbolically."""
    mu.check_for(spec)
    ledger = LaurentLedger()
    ledger.multiply_pd(spec.p, spec.d, 0.5 * spec.d * (lam0 + spec.n), slope=0.5 * spec.d)
    _mu_block(spec, mu, lam0, ledger).scale(_sign(mu))
    return ledger.to_scalar()


def ac_gamma_eta(spec: GrassmannianSpec, mu: HighestWeight, lam0: float) -> MeromorphicScalar:
    """Leading term of gamma(lam) eta_mu(lam) at lam0.

    The factor Gamma_{p,d}(d(lam + p)/2) of eta cancels against gamma(lam), so
    the product is pole-free at every lam0.
    """
    mu.check_for(spec)
    ledger = _constant(spec, LaurentLedger())
    _mu_block(spec, mu, lam0, ledger).scale(_sign(mu))
    result = ledger.to_scalar()
    if result.is_pole:
        logger.warning(f"gamma*eta_{mu} has a pole of order {result.pole_order} at {lam0} on {spec}")
    return result


def f1_image_member(mu: HighestWeight) -> bool:
    """True iff m_2 = ... = m_p = 0, i.e. the K-type survives the first partial Funk transform."""
    return all(v == 0 for v in mu.m[1:])
