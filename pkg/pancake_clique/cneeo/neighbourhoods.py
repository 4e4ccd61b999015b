from typing import FrozenSet, Sequence, Tuple, Union

from pancake_clique.classes.shapes import Pancake2, Tolerance, UnitDisk
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.predicates import distance, intersects, is_lens

__all__ = [
    "two_disks_neighbourhood",
    "disk_lens_pancake_neighbourhood",
    "disk_pancakes_neighbourhood",
    "two_pancakes_neighbourhood",
    "fattened_spine",
]

Pi2Object = Union[UnitDisk, Pancake2]


def fattened_spine(p: Pancake2, tol: Tolerance = None) -> Tuple[float, float]:
    """
    Interval ``[x1 - 1, x2 + 1]`` (widened by ``eps / 2``): two pancakes meet iff their
    fattened spines overlap.
    """
    half = (tol or Tolerance.default()).eps / 2
    return p.x1 - 1 - half, p.x2 + 1 + half


def __expect(objects: Sequence[Pi2Object], i: int, kind: type, what: str):
    if not isinstance(objects[i], kind):
        raise ContractViolation(f"object {i} must be a {what}, got {type(objects[i]).__name__}")
    return objects[i]


def __others(objects: Sequence[Pi2Object], *excluded: int):
    for k, o in enumerate(objects):
        if k not in excluded:
            yield k, o


def two_disks_neighbourhood(
    objects: Sequence[Pi2Object], i: int, j: int, tol: Tolerance = None
) -> FrozenSet[int]:
    """
    Objects meeting both intersecting unit disks ``D = objects[i]`` and ``D' = objects[j]``
    that are no farther from them than they are from each other: disks within ``d(D, D')``
    of both, and pancakes whose lens distance to either disk is within ``d(D, D')``.
    The set induces a cobipartite graph.

    :param objects: unit disks and 2-pancakes
    :param i: index of D
    :param j: index of D'
    :param tol: predicate tolerance
    :return: object indices
    """
    tol = tol or Tolerance.default()
    d = __expect(objects, i, UnitDisk, "unit disk")
    d2 = __expect(objects, j, UnitDisk, "unit disk")
    if not intersects(d, d2, tol):
        raise ContractViolation(f"disks {i} and {j} do not intersect")
    rho = distance(d, d2) + tol.eps

    members = set()
    for k, o in __others(objects, i, j):
        if not (intersects(o, d, tol) and intersects(o, d2, tol)):
            continue
        if isinstance(o, UnitDisk):
            ok = distance(d, o) <= rho and distance(d2, o) <= rho
        else:
            ok = (not is_lens(d, o, tol) or distance(d, o) <= rho) and (
                not is_lens(d2, o, tol) or distance(d2, o) <= rho
            )
        if ok:
            members.add(k)
    return frozenset(members)


def disk_lens_pancake_neighbourhood(
    objects: Sequence[Pi2Object], i: int, j: int, tol: Tolerance = None
) -> FrozenSet[int]:
    """
    Objects meeting the unit disk ``D = objects[i]`` and the pancake ``P = objects[j]``, whose
    intersection is a lens, that stay within ``d(D, P)``: disks ``D_k`` with
    ``d(D, D_k) <= d(D, P)`` (and ``d(D_k, P) <= d(D, P)`` when ``D_k`` and ``P`` form a lens),
    and pancakes whose lens distance to ``D`` is within ``d(D, P)``.
    The set induces a cobipartite graph.

    :param objects: unit disks and 2-pancakes
    :param i: index of D
    :param j: index of P
    :param tol: predicate tolerance
    :return: object indices
    """
    tol = tol or Tolerance.default()
    d = __expect(objects, i, UnitDisk, "unit disk")
    p = __expect(objects, j, Pancake2, "2-pancake")
    if not is_lens(d, p, tol):
        raise ContractViolation(f"disk {i} and pancake {j} do not form a lens")
    rho = distance(d, p) + tol.eps

    members = set()
    for k, o in __others(objects, i, j):
        if not (intersects(o, d, tol) and intersects(o, p, tol)):
            continue
        if isinstance(o, UnitDisk):
            ok = distance(d, o) <= rho and (not is_lens(o, p, tol) or distance(o, p) <= rho)
        else:
            ok = not is_lens(d, o, tol) or distance(d, o) <= rho
        if ok:
            members.add(k)
    return frozenset(members)


def disk_pancakes_neighbourhood(objects: Sequence[Pi2Object], i: int, tol: Tolerance = None) -> FrozenSet[int]:
    """
    Pancakes meeting the unit disk ``objects[i]``; they induce a cobipartite graph.
    """
    tol = tol or Tolerance.default()
    d = __expect(objects, i, UnitDisk, "unit disk")
    return frozenset(k for k, o in __others(objects, i) if isinstance(o, Pancake2) and intersects(o, d, tol))


def two_pancakes_neighbourhood(
    objects: Sequence[Pi2Object], i: int, j: int, tol: Tolerance = None
) -> FrozenSet[int]:
    """
    Pancakes meeting both intersecting pancakes ``objects[i]`` and ``objects[j]`` and
    contained in neither. The set induces a cobipartite graph.

    :param objects: unit disks and 2-pancakes
    :param i: index of the first pancake
    :param j: index of the second pancake
    :param tol: predicate tolerance
    :return: object indices
    """
    tol = tol or Tolerance.default()
    p = __expect(objects, i, Pancake2, "2-pancake")
    p2 = __expect(objects, j, Pancake2, "2-pancake")
    if not intersects(p, p2, tol):
        raise ContractViolation(f"pancakes {i} and {j} do not intersect")
    return frozenset(
        k
        for k, o in __others(objects, i, j)
        if isinstance(o, Pancake2)
        and intersects(o, p, tol)
        and intersects(o, p2, tol)
        and not p.contains(o)
        and not p2.contains(o)
    )
