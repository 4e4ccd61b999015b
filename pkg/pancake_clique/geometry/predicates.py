import math
from typing import List, Tuple

from pancake_clique.classes.shapes import (
    Circle,
    ConvexPolygon,
    GeomObject,
    Pancake2,
    Point2,
    Tolerance,
    UnitDisk,
)
from pancake_clique.exceptions import ContractViolation

__all__ = [
    "point_segment_distance",
    "segment_segment_distance",
    "core_distance",
    "intersects",
    "distance",
    "is_lens",
]

_PLANAR = (UnitDisk, Pancake2, Circle, ConvexPolygon)


def point_segment_distance(p: Point2, a: Point2, b: Point2) -> float:
    """
    Euclidean distance between p and the closed segment [a, b] (a == b allowed).

    :param p: point
    :param a: segment endpoint
    :param b: segment endpoint
    :return: distance
    """
    ab = b - a
    den = ab.dot(ab)
    if den == 0:
        return p.distance(a)
    t = min(1.0, max(0.0, (p - a).dot(ab) / den))
    return p.distance(a + ab * t)


def __orientation(a: Point2, b: Point2, c: Point2) -> float:
    return (b - a).cross(c - a)


def segment_segment_distance(a: Point2, b: Point2, c: Point2, d: Point2) -> float:
    """
    Euclidean distance between the closed segments [a, b] and [c, d].

    :return: 0 when the segments cross, else the smallest endpoint-to-segment distance
    """
    o1, o2 = __orientation(a, b, c), __orientation(a, b, d)
    o3, o4 = __orientation(c, d, a), __orientation(c, d, b)
    if ((o1 > 0 > o2) or (o1 < 0 < o2)) and ((o3 > 0 > o4) or (o3 < 0 < o4)):
        return 0.0
    return min(
        point_segment_distance(a, c, d),
        point_segment_distance(b, c, d),
        point_segment_distance(c, a, b),
        point_segment_distance(d, a, b),
    )


def __core(o: GeomObject) -> Tuple[str, object, float]:
    """
    Every planar object is a core (point, segment or polygon) fattened by a radius.

    :param o: planar object
    :return: (core kind, core data, radius)
    """
    if isinstance(o, UnitDisk):
        return "point", o.center, 1.0
    if isinstance(o, Circle):
        return "point", o.center, o.radius
    if isinstance(o, Pancake2):
        return "segment", o.spine, 1.0
    if isinstance(o, ConvexPolygon):
        return "polygon", o, 0.0
    raise ContractViolation(
        f"planar predicates accept unit disks, pancakes, circles and convex polygons, got {type(o).__name__}"
    )


def __vertices(kind: str, data: object) -> List[Point2]:
    if kind == "point":
        return [data]
    if kind == "segment":
        return list(data)
    return list(data.vertices)


def __segments(kind: str, data: object) -> List[Tuple[Point2, Point2]]:
    if kind == "point":
        return [(data, data)]
    if kind == "segment":
        return [data]
    return list(data.edges())


def core_distance(a: GeomObject, b: GeomObject) -> float:
    """
    Distance between the cores of two planar objects: centers of disks and circles,
    spines of pancakes, polygons themselves.

    :param a: planar object
    :param b: planar object
    :return: non-negative distance
    """
    ka, da, _ = __core(a)
    kb, db, _ = __core(b)

    # a convex polygon meets another convex core iff it holds one of its vertices
    # or their boundaries cross
    if ka == "polygon" and any(da.contains_point(v, Tolerance(1e-12)) for v in __vertices(kb, db)):
        return 0.0
    if kb == "polygon" and any(db.contains_point(v, Tolerance(1e-12)) for v in __vertices(ka, da)):
        return 0.0

    best = math.inf
    for p, q in __segments(ka, da):
        for r, s in __segments(kb, db):
            best = min(best, segment_segment_distance(p, q, r, s))
            if best == 0.0:
                return 0.0
    return best


def intersects(a: GeomObject, b: GeomObject, tol: Tolerance = None) -> bool:
    """
    Closed-set intersection test: tangency counts as intersecting.

    :param a: planar object
    :param b: planar object
    :param tol: predicate tolerance
    :return: True if the two closed sets meet
    """
    eps = (tol or Tolerance.default()).eps
    _, _, ra = __core(a)
    _, _, rb = __core(b)
    return core_distance(a, b) <= ra + rb + eps


def distance(a: GeomObject, b: GeomObject) -> float:
    """
    Distance between two unit disks and/or 2-pancakes: center distance for two disks,
    center-to-spine distance for a disk and a pancake, spine gap for two pancakes.

    :param a: UnitDisk or Pancake2
    :param b: UnitDisk or Pancake2
    :return: non-negative distance
    """
    for o in (a, b):
        if not isinstance(o, (UnitDisk, Pancake2)):
            raise ContractViolation(f"distance is defined for unit disks and pancakes, got {type(o).__name__}")
    return core_distance(a, b)


def is_lens(d: UnitDisk, p: Pancake2, tol: Tolerance = None) -> bool:
    """
    Whether the intersection of a unit disk and a pancake is a lens.

    The disk center must not project strictly inside the spine and no corner
    ``(x1, +-1), (x2, +-1)`` may lie strictly inside the disk. A degenerate pancake is a
    unit disk, so any non-empty intersection with it is a lens.

    :param d: unit disk
    :param p: 2-pancake
    :param tol: predicate tolerance
    :return: True for a lens
    """
    if not isinstance(d, UnitDisk) or not isinstance(p, Pancake2):
        raise ContractViolation("is_lens expects a UnitDisk and a Pancake2")
    tol = tol or Tolerance.default()
    if not intersects(d, p, tol):
        return False
    if p.is_degenerate:
        return True
    cx = d.center.x
    if not (cx <= p.x1 + tol.eps or cx >= p.x2 - tol.eps):
        return False
    return all(d.center.distance(corner) >= 1.0 - tol.eps for corner in p.corners())
