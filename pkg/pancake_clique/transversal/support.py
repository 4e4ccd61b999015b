import math
from typing import Sequence, Tuple, Union

import numpy as np

from pancake_clique.classes.reports import SupportInterval
from pancake_clique.classes.shapes import Circle, ConvexPolygon, Line2, Point2, Tolerance, UnitDisk
from pancake_clique.exceptions import ContractViolation, GeometryError

__all__ = ["support_interval", "support_bounds", "chord_interval", "ConvexSet"]

ConvexSet = Union[Circle, UnitDisk, ConvexPolygon]


def __normal(theta: float) -> Point2:
    return Point2(-math.sin(theta), math.cos(theta))


def support_interval(s: ConvexSet, theta: float) -> SupportInterval:
    """
    The support_interval function computes the offsets of the lines of direction ``theta``
    that meet ``s``: ``[min, max]`` of ``p . n(theta)`` over ``p`` in ``s``.

    :param s: circle or convex polygon
    :param theta: direction angle
    :return: SupportInterval
    """
    n = __normal(theta)
    if isinstance(s, (Circle, UnitDisk)):
        t = n.dot(s.center)
        return SupportInterval(t - s.radius, t + s.radius)
    if isinstance(s, ConvexPolygon):
        values = [n.dot(v) for v in s.vertices]
        return SupportInterval(min(values), max(values))
    raise ContractViolation(f"support intervals are defined for circles and convex polygons, got {type(s).__name__}")


def support_bounds(sets: Sequence[ConvexSet], thetas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Support intervals of every set at every angle.

    :param sets: circles or convex polygons
    :param thetas: angles, shape (R,)
    :return: ``lo`` and ``hi`` arrays of shape (len(sets), R)
    """
    thetas = np.asarray(thetas, dtype=float)
    nx_, ny_ = -np.sin(thetas), np.cos(thetas)
    lo = np.empty((len(sets), thetas.size))
    hi = np.empty_like(lo)
    for k, s in enumerate(sets):
        if isinstance(s, (Circle, UnitDisk)):
            t = nx_ * s.center.x + ny_ * s.center.y
            lo[k], hi[k] = t - s.radius, t + s.radius
        elif isinstance(s, ConvexPolygon):
            xy = np.array([v.as_tuple() for v in s.vertices])
            proj = np.outer(xy[:, 0], nx_) + np.outer(xy[:, 1], ny_)
            lo[k], hi[k] = proj.min(axis=0), proj.max(axis=0)
        else:
            raise ContractViolation(f"unsupported set {type(s).__name__}")
    return lo, hi


def chord_interval(line: Line2, s: ConvexSet, tol: Tolerance = None) -> Tuple[float, float]:
    """
    Parameters, along the line direction, of the chord the line cuts in ``s``.

    :param line: the line
    :param s: circle or convex polygon
    :param tol: predicate tolerance
    :return: (start, end)
    :raise GeometryError: when the line misses ``s``
    """
    eps = (tol or Tolerance.default()).eps
    if isinstance(s, (Circle, UnitDisk)):
        d = line.signed_distance(s.center)
        if abs(d) > s.radius + eps:
            raise GeometryError(f"line misses {s}")
        half = math.sqrt(max(0.0, s.radius * s.radius - d * d))
        t = line.parameter(s.center)
        return t - half, t + half

    params = []
    for a, b in s.edges():
        sa, sb = line.signed_distance(a), line.signed_distance(b)
        if abs(sa) <= eps:
            params.append(line.parameter(a))
        if (sa > eps and sb < -eps) or (sa < -eps and sb > eps):
            p = a + (b - a) * (sa / (sa - sb))
            params.append(line.parameter(p))
    if not params:
        raise GeometryError(f"line misses polygon with {len(s.vertices)} vertices")
    return min(params), max(params)
