"""
Enumeration of L-spherical highest weights
"""
import logging
from typing import Iterator, List, Tuple

from ..core.exceptions import DomainError
from ..domain.value_objects import GrassmannianSpec, HighestWeight

logger = logging.getLogger("spectrum.weights")


def _dominant(p: int, upper: int) -> Iterator[Tuple[int, ...]]:
    """Even non-increasing non-negative tuples with first entry <= upper, ascending lex."""
    if p == 0:
        yield ()
        return
    for first in range(0, upper + 1, 2):
        for rest in _dominant(p - 1, first):
            yield (first,) + rest


def enumerate_weights(spec: GrassmannianSpec, max_degree: int) -> List[HighestWeight]:
    """All spherical highest weights of spec with m_1 <= max_degree.

    Over R with p = q >= 2 the last entry may be negative, subject to
    m_(p-1) >= |m_p|; weights the strict inequality m_(p-1) > |m_p| would
    exclude are reported at DEBUG level.
    """
    if max_degree < 0:
        raise DomainError(f"max_degree must be non-negative, got {max_degree}")
    upper = max_degree - max_degree % 2
    weights = set()
    for m in _dominant(spec.p, upper):
        weights.add(m)
        if spec.is_square and spec.p >= 2 and m[-1] > 0:
            weights.add(m[:-1] + (-m[-1],))

    result = [HighestWeight(m) for m in sorted(weights)]
    if spec.is_square and spec.p >= 2:
        boundary = [w for w in result if w.m[-2] == abs(w.m[-1])]
        if boundary:
            logger.debug(
                f"{spec}: {len(boundary)} weights with m_(p-1) = |m_p| kept "
                f"(excluded by the strict form): {', '.join(str(w) for w in boundary)}"
            )
    logger.debug(f"{spec}: {len(result)} spherical weights up to degree {max_degree}")
    return result
