import logging
from typing import Sequence, Tuple

from pancake_clique.classes.reports import MiddleMode
from pancake_clique.classes.shapes import Circle, Tolerance
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.predicates import intersects
from pancake_clique.transversal.sweep import DEFAULT_RESOLUTION, middle_profile

__all__ = ["Triple", "check_triple", "check_family", "classify_middle_mode", "other_indices"]

logger = logging.getLogger(__name__)

Triple = Tuple[Circle, Circle, Circle]


def other_indices(i: int) -> Tuple[int, int]:
    """The two triple indices other than ``i``, increasing."""
    if i not in (0, 1, 2):
        raise ContractViolation(f"triple index must be 0, 1 or 2, got {i}")
    a, b = sorted({0, 1, 2} - {i})
    return a, b


def check_triple(t: Sequence[Circle], tol: Tolerance = None) -> None:
    """
    :raise ContractViolation: unless ``t`` holds three pairwise disjoint circles
    """
    if len(t) != 3 or not all(isinstance(c, Circle) for c in t):
        raise ContractViolation("a triple is made of three circles")
    for a in range(3):
        for b in range(a + 1, 3):
            if intersects(t[a], t[b], tol):
                raise ContractViolation(f"triple circles {a} and {b} intersect")


def check_family(t: Sequence[Circle], family: Sequence[Circle], tol: Tolerance = None) -> None:
    """
    :raise ContractViolation: when a family circle misses a triple circle
    """
    for j, dp in enumerate(family):
        for k, d in enumerate(t):
            if not intersects(dp, d, tol):
                raise ContractViolation(f"family circle {j} misses triple circle {k}")


def classify_middle_mode(
    t: Sequence[Circle], resolution: int = DEFAULT_RESOLUTION, tol: Tolerance = None
) -> MiddleMode:
    """
    The classify_middle_mode function tells which triple circles are the middle of some line
    transversal.

    :param t: three pairwise disjoint circles
    :param resolution: number of swept directions
    :param tol: predicate tolerance
    :return: MiddleMode
    """
    check_triple(t, tol)
    mode = MiddleMode.from_profile(middle_profile(t, resolution, tol=tol).middle_profile)
    logger.debug("middle mode %s", mode)
    return mode
