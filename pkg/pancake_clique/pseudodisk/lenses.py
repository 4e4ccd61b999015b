from typing import List

import numpy as np

from pancake_clique.classes.shapes import Circle, Point2, Tolerance
from pancake_clique.geometry.circles import circle_intersections, lens_witness

__all__ = ["lens_samples", "nearest_lens_point", "segment_distances"]

LENS_SAMPLES = 96


def __boundary(c: Circle, count: int) -> np.ndarray:
    angles = np.linspace(0.0, 2 * np.pi, count, endpoint=False)
    return np.column_stack([c.center.x + c.radius * np.cos(angles), c.center.y + c.radius * np.sin(angles)])


def __inside(points: np.ndarray, c: Circle, eps: float) -> np.ndarray:
    return np.hypot(points[:, 0] - c.center.x, points[:, 1] - c.center.y) <= c.radius + eps


def lens_samples(a: Circle, b: Circle, count: int = LENS_SAMPLES, tol: Tolerance = None) -> np.ndarray:
    """
    Points of the closed intersection of two disks: boundary samples of either circle lying
    in the other, the boundary crossings and the lens witness.

    :param a: first disk
    :param b: second disk
    :param count: boundary samples per circle
    :param tol: predicate tolerance
    :return: array of shape (k, 2)
    """
    tol = tol or Tolerance.default()
    pa, pb = __boundary(a, count), __boundary(b, count)
    extra = [p.as_tuple() for p in circle_intersections(a, b, tol)]
    extra.append(lens_witness(a, b, tol).as_tuple())
    return np.vstack([pa[__inside(pa, b, tol.eps)], pb[__inside(pb, a, tol.eps)], np.array(extra)])


def nearest_lens_point(dp: Circle, d: Circle, target: Point2, tol: Tolerance = None) -> Point2:
    """
    Boundary crossing of ``dp`` and ``d`` closest to ``target``. Without crossings the lens is
    the smaller disk, and its point closest to ``target`` is returned.
    """
    tol = tol or Tolerance.default()
    crossings: List[Point2] = circle_intersections(dp, d, tol)
    if crossings:
        return min(crossings, key=lambda p: (p.distance(target), p.as_tuple()))
    inner = d if d.radius <= dp.radius else dp
    v = target - inner.center
    if v.norm() == 0:
        return inner.center
    return inner.center + v.unit() * inner.radius


def segment_distances(p: np.ndarray, q: np.ndarray, c: Point2) -> np.ndarray:
    """
    Distances from ``c`` to every segment ``[p[i], q[j]]``.

    :param p: array (n, 2)
    :param q: array (m, 2)
    :param c: point
    :return: array (n, m)
    """
    cc = np.array(c.as_tuple())
    d = q[None, :, :] - p[:, None, :]
    den = np.einsum("ijk,ijk->ij", d, d)
    num = np.einsum("ijk,ik->ij", d, cc - p)
    t = np.clip(np.divide(num, den, out=np.zeros_like(num), where=den > 0), 0.0, 1.0)
    closest = p[:, None, :] + d * t[:, :, None]
    return np.linalg.norm(closest - cc, axis=2)
