import logging
from typing import FrozenSet, Iterable, Sequence, Tuple

from pancake_clique.classes.reports import MiddleMode, TangentShape
from pancake_clique.classes.shapes import Circle, Tolerance
from pancake_clique.exceptions import ContractViolation, DegenerateInstance
from pancake_clique.geometry.predicates import intersects
from pancake_clique.pseudodisk.cases import case_of
from pancake_clique.pseudodisk.containment import is_centred, is_outside_containing
from pancake_clique.pseudodisk.tangents import tangent_shape
from pancake_clique.pseudodisk.triple import check_family, check_triple, classify_middle_mode
from pancake_clique.transversal.sweep import DEFAULT_RESOLUTION

__all__ = ["build_bipartition", "verify_bipartition"]

logger = logging.getLogger(__name__)


def __centred_somewhere(dp: Circle, t, shapes, tol) -> bool:
    for shape in shapes:
        if is_outside_containing(dp, t, shape.index, shape, tol) and is_centred(dp, t, shape.index, shape, tol):
            return True
    return False


def build_bipartition(
    t: Sequence[Circle],
    family: Sequence[Circle],
    resolution: int = DEFAULT_RESOLUTION,
    tol: Tolerance = None,
    mode: MiddleMode = None,
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    The build_bipartition function splits a family of circles, each meeting the three
    pairwise disjoint circles of ``t``, into two parts meant to be cliques.

    - No transversal: the whole family meets pairwise, a single part.
    - One middle circle: cases 1 and 2 against cases 3 and 4.
    - A contained middle circle: cases 1 to 3 against cases 4 to 6.
    - Otherwise every middle circle is one_intersecting: circles centred with respect to some
      middle circle against the rest.

    Circles containing a whole triple circle meet every family circle and go to the first part.

    :param t: three pairwise disjoint circles
    :param family: circles meeting all three
    :param resolution: number of swept directions for the middle mode
    :param tol: predicate tolerance
    :param mode: middle mode, when already known
    :return: (X1, X2) as sets of positions in ``family``
    """
    tol = tol or Tolerance.default()
    check_triple(t, tol)
    check_family(t, family, tol)
    mode = mode or classify_middle_mode(t, resolution, tol)

    x1, x2 = set(), set()
    rest = []
    for j, dp in enumerate(family):
        if any(dp.contains_circle(d, tol) for d in t):
            x1.add(j)
        else:
            rest.append(j)

    if mode.tag == MiddleMode.NO_TRANSVERSAL:
        x1.update(rest)
    elif mode.tag == MiddleMode.ONE_MIDDLE:
        for j in rest:
            (x1 if case_of(family[j], t, mode, tol=tol).side == 1 else x2).add(j)
    else:
        shapes = [tangent_shape(t, m, tol) for m in sorted(mode.middles)]
        contained = [s for s in shapes if s.tag == TangentShape.CONTAINED]
        if contained:
            shape = contained[0]
            for j in rest:
                (x1 if case_of(family[j], t, mode, shape, tol=tol).side == 1 else x2).add(j)
        else:
            if any(s.tag != TangentShape.ONE_INTERSECTING for s in shapes):
                raise DegenerateInstance(f"{mode.tag} triple with a two_intersecting middle circle")
            for j in rest:
                (x1 if __centred_somewhere(family[j], t, shapes, tol) else x2).add(j)

    logger.info("%s triple: family of %d split into %d and %d", mode.tag, len(family), len(x1), len(x2))
    return frozenset(x1), frozenset(x2)


def verify_bipartition(
    family: Sequence[Circle], x1: Iterable[int], x2: Iterable[int], tol: Tolerance = None
) -> bool:
    """
    Whether both parts are cliques of the intersection graph of ``family``. The parts must
    partition the positions of ``family``.

    :param family: circles
    :param x1: positions in the first part
    :param x2: positions in the second part
    :param tol: predicate tolerance
    :return: True when every pair within a part intersects
    :raise ContractViolation: when the parts overlap or miss a position
    """
    x1, x2 = sorted(x1), sorted(x2)
    shared = set(x1) & set(x2)
    if shared:
        raise ContractViolation(f"parts share positions {sorted(shared)}")
    if sorted(x1 + x2) != list(range(len(family))):
        raise ContractViolation(f"parts do not cover positions 0..{len(family) - 1}: {x1} {x2}")
    for part in (x1, x2):
        for n, j in enumerate(part):
            for k in part[n + 1 :]:
                if not intersects(family[j], family[k], tol):
                    return False
    return True
