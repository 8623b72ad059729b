"""
Multivariate gamma function with pole bookkeeping

Every product or quotient of ordinary gamma factors is accumulated in a
LaurentLedger: regular factors go through scipy's gammaln/gammasgn in
log-space, factors sitting on a pole contribute their residue coefficient
(-1)^k / (k! * slope) and raise the pole order by one. Ratios of poles are
therefore formed by subtracting orders, never by dividing large numbers.
"""
import logging
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.special import gammaln, gammasgn

from ..core.exceptions import DomainError
from ..domain.value_objects import GrassmannianSpec, MeromorphicScalar

logger = logging.getLogger("specfun.gamma")

INTEGER_TOL = 1e-9
LOG_FLOAT_MAX = math.log(sys.float_info.max)

ArgLike = Union[float, Sequence[float], np.ndarray]


def nonpositive_integer(x: float) -> Union[int, None]:
    """k if x == -k for an integer k >= 0 (within INTEGER_TOL), else None."""
    nearest = round(x)
    if nearest <= 0 and abs(x - nearest) < INTEGER_TOL * max(1.0, abs(x)):
        return int(-nearest)
    return None


@dataclass
class LaurentLedger:
    """Leading Laurent term c * (lam - lam0)^(-order) of a gamma product.

    slope is the derivative of a gamma argument with respect to the
    underlying variable lam; it only matters for factors on a pole.
    """
    log_abs: float = 0.0
    sign: float = 1.0
    order: int = 0

    def _factor(self, x: float, slope: float, power: int) -> None:
        k = nonpositive_integer(x)
        if k is not None and slope != 0.0:
            # Gamma(x) ~ (-1)^k / (k! * slope * (lam - lam0))
            self.log_abs += power * (-math.lgamma(k + 1) - math.log(abs(slope)))
            self.sign *= (-1.0) ** k * math.copysign(1.0, slope)
            self.order += power
            return
        if k is not None:
            raise ZeroDivisionError(f"Gamma factor frozen at its pole {x}")
        self.log_abs += power * float(gammaln(x))
        self.sign *= float(gammasgn(x))

    def multiply(self, x: float, slope: float = 1.0) -> "LaurentLedger":
        """Multiply by Gamma(x)."""
        self._factor(float(x), slope, +1)
        return self

    def divide(self, x: float, slope: float = 1.0) -> "LaurentLedger":
        """Divide by Gamma(x)."""
        self._factor(float(x), slope, -1)
        return self

    def multiply_pd(self, p: int, d: int, args: ArgLike, slope: float = 1.0) -> "LaurentLedger":
        for x in gamma_pd_arguments(p, d, args):
            self.multiply(x, slope)
        return self

    def divide_pd(self, p: int, d: int, args: ArgLike, slope: float = 1.0) -> "LaurentLedger":
        for x in gamma_pd_arguments(p, d, args):
            self.divide(x, slope)
        return self

    def scale(self, factor: float) -> "LaurentLedger":
        if factor == 0.0:
            raise ZeroDivisionError("Ledger cannot hold an exact zero scale")
        self.log_abs += math.log(abs(factor))
        self.sign *= math.copysign(1.0, factor)
        return self

    def to_scalar(self) -> MeromorphicScalar:
        if self.log_abs >= LOG_FLOAT_MAX:
            logger.warning(f"Gamma product overflows (log |value| = {self.log_abs:.1f})")
            return MeromorphicScalar(value=math.copysign(math.inf, self.sign), pole_order=self.order)
        return MeromorphicScalar(value=self.sign * math.exp(self.log_abs), pole_order=self.order)


def gamma_pd_arguments(p: int, d: int, lam: ArgLike) -> np.ndarray:
    """Arguments lam_j - d(j-1)/2 of the ordinary gamma factors of Gamma_{p,d}."""
    values = np.asarray(lam, dtype=float)
    if values.ndim == 0:
        values = np.full(p, float(values))
    if values.shape != (p,):
        raise DomainError(f"Gamma_{{{p},{d}}} needs {p} arguments, got {values.shape}")
    return values - 0.5 * d * np.arange(p)


def gamma_pd(p: int, d: int, lam: ArgLike) -> MeromorphicScalar:
    """Gamma_{p,d}(lam) = prod_j Gamma(lam_j - d(j-1)/2); scalar lam means (lam, ..., lam)."""
    return LaurentLedger().multiply_pd(p, d, lam).to_scalar()


def normalizer_gamma(spec: GrassmannianSpec, lam: float) -> float:
    """gamma(lam) = 1 / Gamma_{p,d}(d(lam + p)/2); 0 where the gamma product has a pole."""
    ledger = LaurentLedger().divide_pd(spec.p, spec.d, 0.5 * spec.d * (lam + spec.p))
    return ledger.to_scalar().evaluate()


def pole_order_C(spec: GrassmannianSpec, lam0: float) -> int:
    """Order of the pole of lam -> Gamma_{p,d}(d(lam + p)/2) at lam0 (0 when regular)."""
    args = gamma_pd_arguments(spec.p, spec.d, 0.5 * spec.d * (lam0 + spec.p))
    return sum(1 for x in args if nonpositive_integer(x) is not None)


def pole_set(spec: GrassmannianSpec, lowest: float) -> Iterable[float]:
    """Poles of gamma(lam)^-1 in [lowest, 0) on the half-integer lattice, descending."""
    lam = -0.5
    while lam >= lowest - 1e-12:
        if pole_order_C(spec, lam):
            yield lam
        lam -= 0.5
