import logging
import math
from typing import List, Tuple

from pancake_clique.classes.shapes import Circle, Line2, Point2, Tolerance
from pancake_clique.exceptions import GeometryError
from pancake_clique.geometry.predicates import point_segment_distance

__all__ = [
    "circle_intersections",
    "lens_witness",
    "external_tangents",
    "half_lens_contains",
    "contains_cap",
    "segment_meets_disk",
]

logger = logging.getLogger(__name__)


def circle_intersections(a: Circle, b: Circle, tol: Tolerance = None) -> List[Point2]:
    """
    Crossing points of the boundaries of two disks.

    :param a: first disk (Circle or UnitDisk)
    :param b: second disk (Circle or UnitDisk)
    :param tol: predicate tolerance
    :return: zero, one (tangency) or two points; two points are ordered counter-clockwise
        around ``a`` starting from the right of ``a -> b``
    """
    eps = (tol or Tolerance.default()).eps
    d = b.center - a.center
    L = d.norm()
    ra, rb = a.radius, b.radius
    if L == 0 or L > ra + rb + eps or L < abs(ra - rb) - eps:
        return []

    u = d * (1.0 / L)
    w = u.left_normal()
    x = (L * L + ra * ra - rb * rb) / (2 * L)
    h2 = ra * ra - x * x
    base = a.center + u * x
    if h2 <= 0:
        return [base]
    h = math.sqrt(h2)
    return [base - w * h, base + w * h]


def lens_witness(a: Circle, b: Circle, tol: Tolerance = None) -> Point2:
    """
    Canonical point of the intersection of two closed disks: the midpoint of the common
    chord, or the smaller center when one disk lies inside the other.

    :param a: first disk
    :param b: second disk
    :param tol: predicate tolerance
    :return: a point of both disks
    """
    eps = (tol or Tolerance.default()).eps
    L = a.center.distance(b.center)
    ra, rb = a.radius, b.radius
    if L > ra + rb + eps:
        raise GeometryError(f"no intersection between {a} and {b}")
    if L <= abs(ra - rb):
        return a.center if ra <= rb else b.center

    x = (L * L + ra * ra - rb * rb) / (2 * L)
    x = min(max(x, L - rb), ra)
    return a.center + (b.center - a.center) * (x / L)


def external_tangents(a: Circle, b: Circle, tol: Tolerance = None) -> Tuple[Line2, Line2]:
    """
    The two common tangents keeping both disks on the same side.

    Both returned lines are oriented with the two centers on their positive side, so the
    signed distance of each center equals its radius.

    :param a: first disk
    :param b: second disk
    :param tol: predicate tolerance
    :return: pair of lines
    """
    eps = (tol or Tolerance.default()).eps
    d = b.center - a.center
    L = d.norm()
    dr = b.radius - a.radius
    if L <= abs(dr) + eps:
        raise GeometryError(f"no external tangents: one of {a}, {b} lies inside the other")
    if L < a.radius + b.radius - eps:
        logger.warning("external tangents of intersecting disks %s and %s", a, b)

    u = d * (1.0 / L)
    w = u.left_normal()
    cos_phi = dr / L
    sin_phi = math.sqrt(max(0.0, 1.0 - cos_phi * cos_phi))

    lines = []
    for s in (sin_phi, -sin_phi):
        n = u * cos_phi + w * s
        lines.append(Line2.from_normal(n, n.dot(a.center) - a.radius))
    return lines[0], lines[1]


def half_lens_contains(
    c: Point2,
    rho: float,
    c2: Point2,
    rho2: float,
    q: Point2,
    side: str,
    tol: Tolerance = None,
) -> bool:
    """
    Membership in a closed half-lens. The lens of the disks (c, rho) and (c2, rho2) is cut
    by the line through c and c2; ``upper`` is the half on the left of c -> c2.

    :param c: first center
    :param rho: first radius
    :param c2: second center
    :param rho2: second radius
    :param q: query point
    :param side: ``upper`` or ``lower``
    :param tol: predicate tolerance
    :return: True if q lies in the selected half-lens
    """
    eps = (tol or Tolerance.default()).eps
    if side not in ("upper", "lower"):
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    if c.distance(c2) > rho + rho2 + eps:
        raise GeometryError("no intersection: the half-lens is empty")
    if c == c2:
        raise GeometryError("concentric disks do not define a dividing line")

    if q.distance(c) > rho + eps or q.distance(c2) > rho2 + eps:
        return False
    s = (c2 - c).cross(q - c) / c.distance(c2)
    return s >= -eps if side == "upper" else s <= eps


def contains_cap(container: Circle, disk: Circle, line: Line2, tol: Tolerance = None) -> bool:
    """
    Whether ``container`` holds the part of ``disk`` on the closed positive side of ``line``.

    Disk boundaries cross at most twice, so the cap is inside the container iff the cap's
    extremal boundary point is, and no crossing point lies on the open arc of the cap.

    :param container: the covering disk
    :param disk: the disk being cut
    :param line: cutting line
    :param tol: predicate tolerance
    :return: True when the cap is covered
    """
    tol = tol or Tolerance.default()
    s_center = line.signed_distance(disk.center)
    if s_center < -disk.radius:
        return True
    if container.contains_circle(disk, tol):
        return True

    extremal = disk.center + line.normal * disk.radius
    if not container.contains_point(extremal, tol):
        return False
    for chi in circle_intersections(container, disk, tol):
        if line.signed_distance(chi) > tol.eps:
            return False
    return True


def segment_meets_disk(p: Point2, q: Point2, disk: Circle, tol: Tolerance = None) -> bool:
    """Closed segment against closed disk; a degenerate segment is a point."""
    eps = (tol or Tolerance.default()).eps
    return point_segment_distance(disk.center, p, q) <= disk.radius + eps
