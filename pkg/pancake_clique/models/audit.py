from typing import List, Sequence, Tuple, Union

from pancake_clique.classes.instance import Instance
from pancake_clique.classes.shapes import Circle, Pancake2, Tolerance, UnitDisk
from pancake_clique.exceptions import GeometryError
from pancake_clique.geometry.circles import circle_intersections, external_tangents, lens_witness
from pancake_clique.geometry.predicates import distance, point_segment_distance

__all__ = ["pi2_margin_violations", "pseudodisk_margin_violations", "pi2_pair_quantities"]

Violation = Tuple[int, int, str, float]


def pi2_pair_quantities(a: Union[UnitDisk, Pancake2], b: Union[UnitDisk, Pancake2]) -> List[Tuple[str, float]]:
    """
    Signed distances to their thresholds of every quantity the predicates branch on for a pair
    of unit disks and 2-pancakes.

    :param a: unit disk or pancake
    :param b: unit disk or pancake
    :return: (name, value) pairs; a value close to 0 is near a decision boundary
    """
    out = [("distance", distance(a, b) - 2.0)]
    if isinstance(a, Pancake2) and isinstance(b, UnitDisk):
        a, b = b, a
    if isinstance(a, UnitDisk) and isinstance(b, Pancake2):
        cx = a.center.x
        out.append(("center_x1", cx - b.x1))
        out.append(("center_x2", cx - b.x2))
        for k, corner in enumerate(b.corners()):
            out.append((f"corner{k}", a.center.distance(corner) - 1.0))
    elif isinstance(a, Pancake2) and isinstance(b, Pancake2):
        out.append(("left_ends", a.x1 - b.x1))
        out.append(("right_ends", a.x2 - b.x2))
    return out


def pi2_margin_violations(objects: Sequence[Union[UnitDisk, Pancake2]], margin: float) -> List[Violation]:
    """
    The pi2_margin_violations function lists every guarded pair quantity closer than
    ``margin`` to its threshold.

    :param objects: unit disks and 2-pancakes
    :param margin: general-position margin
    :return: (i, j, quantity, value) tuples, empty for a clean instance
    """
    found = []
    for i in range(len(objects)):
        for j in range(i + 1, len(objects)):
            for name, value in pi2_pair_quantities(objects[i], objects[j]):
                if abs(value) < margin:
                    found.append((i, j, name, value))
    return found


def __triple_quantities(t: Sequence[Circle]) -> List[Tuple[int, int, str, float]]:
    out = []
    for a in range(3):
        for b in range(a + 1, 3):
            out.append((a, b, "gap", t[a].center.distance(t[b].center) - t[a].radius - t[b].radius))
    for i in range(3):
        a, b = sorted({0, 1, 2} - {i})
        for k, line in enumerate(external_tangents(t[a], t[b])):
            out.append((i, i, f"tangent{k}", abs(line.signed_distance(t[i].center)) - t[i].radius))
    return out


def family_quantities(dp: Circle, t: Sequence[Circle], tol: Tolerance = None) -> List[Tuple[int, str, float]]:
    """
    Guarded quantities of one family circle against the triple: outer and inner tangency,
    crossings against the tangents, and the witness segments against each middle candidate.

    :param dp: family circle
    :param t: the triple
    :param tol: predicate tolerance
    :return: (triple index, name, value) tuples
    """
    out = []
    for k, d in enumerate(t):
        dist = dp.center.distance(d.center)
        out.append((k, "outer", dp.radius + d.radius - dist))
        out.append((k, "inner", dist - abs(dp.radius - d.radius)))
    for i in range(3):
        a, b = sorted({0, 1, 2} - {i})
        chi = circle_intersections(dp, t[i], tol)
        for n, line in enumerate(external_tangents(t[a], t[b])):
            for p in chi:
                out.append((i, f"crossing_tangent{n}", line.signed_distance(p)))
        try:
            wa, wb = lens_witness(dp, t[a], tol), lens_witness(dp, t[b], tol)
        except GeometryError:
            continue
        out.append((i, "witness_segment", point_segment_distance(t[i].center, wa, wb) - t[i].radius))
    return out


def pseudodisk_margin_violations(instance: Instance, margin: float, tol: Tolerance = None) -> List[Violation]:
    """
    The pseudodisk_margin_violations function lists every guarded quantity of a pseudodisk
    instance closer than ``margin`` to its threshold.

    :param instance: pseudodisk instance
    :param margin: general-position margin
    :param tol: predicate tolerance
    :return: (object index, object index, quantity, value) tuples in instance indices
    """
    t = instance.triple_circles
    idx = instance.triple
    found = [
        (idx[a], idx[b], name, value)
        for a, b, name, value in __triple_quantities(t)
        if abs(value) < margin
    ]
    for j, dp in zip(instance.family_indices, instance.family):
        for k, name, value in family_quantities(dp, t, tol):
            if abs(value) < margin:
                found.append((j, idx[k], name, value))
    return found
