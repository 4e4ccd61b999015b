import logging
from typing import Sequence, Tuple

import numpy as np

from pancake_clique.classes.graph import Graph
from pancake_clique.classes.shapes import Circle, ConvexPolygon, GeomObject, Pancake2, Tolerance, UnitDisk
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.predicates import intersects

__all__ = ["x_extent", "build_intersection_graph"]

logger = logging.getLogger(__name__)


def x_extent(o: GeomObject) -> Tuple[float, float]:
    """
    Smallest and largest x-coordinate of a planar object.

    :param o: planar object
    :return: (left, right)
    """
    if isinstance(o, UnitDisk):
        return o.center.x - 1.0, o.center.x + 1.0
    if isinstance(o, Circle):
        return o.center.x - o.radius, o.center.x + o.radius
    if isinstance(o, Pancake2):
        return o.x1 - 1.0, o.x2 + 1.0
    if isinstance(o, ConvexPolygon):
        xs = [v.x for v in o.vertices]
        return min(xs), max(xs)
    raise ContractViolation(f"no x-extent for {type(o).__name__}")


def build_intersection_graph(objects: Sequence[GeomObject], tol: Tolerance = None) -> Graph:
    """
    The build_intersection_graph function builds the intersection graph of a list of planar objects:
    vertex ``i`` stands for ``objects[i]`` and ``{i, j}`` is an edge iff the two closed sets meet.

    Objects are swept by their left x-coordinate; a pair is tested only when the x-extents
    overlap within twice ``tol.eps``, which absorbs rounding in the extents.

    :param objects: planar objects
    :param tol: predicate tolerance
    :return: Graph instance
    """
    tol = tol or Tolerance.default()
    n = len(objects)
    extents = np.array([x_extent(o) for o in objects], dtype=float).reshape(n, 2)
    order = np.argsort(extents[:, 0], kind="stable")

    edges, active, tested = [], [], 0
    for i in order.tolist():
        # objects ending left of this one cannot meet anything further right either
        active = [j for j in active if extents[j, 1] >= extents[i, 0] - 2 * tol.eps]
        for j in active:
            tested += 1
            if intersects(objects[j], objects[i], tol):
                edges.append((min(i, j), max(i, j)))
        active.append(i)
    logger.debug("intersection graph: %d vertices, %d edges, %d pairs tested", n, len(edges), tested)
    return Graph(n, edges)
