import logging
from typing import Sequence, Union

from pancake_clique.classes.graph import Graph
from pancake_clique.classes.ordering import EdgeOrdering
from pancake_clique.classes.shapes import Pancake2, Tolerance, UnitDisk
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.predicates import distance, is_lens
from pancake_clique.graphs.intersection import build_intersection_graph

__all__ = ["geometric_cneeo_ordering", "edge_class", "check_pi2_objects"]

logger = logging.getLogger(__name__)

Pi2Object = Union[UnitDisk, Pancake2]


def check_pi2_objects(objects: Sequence[Pi2Object]) -> None:
    """
    :raise ContractViolation: when an object is neither a unit disk nor a 2-pancake
    """
    for i, o in enumerate(objects):
        if not isinstance(o, (UnitDisk, Pancake2)):
            raise ContractViolation(f"object {i} is a {type(o).__name__}, expected UnitDisk or Pancake2")


def edge_class(objects: Sequence[Pi2Object], u: int, v: int, tol: Tolerance = None) -> int:
    """
    Class of an edge of the intersection graph.

    :param objects: unit disks and 2-pancakes
    :param u: endpoint
    :param v: endpoint
    :param tol: predicate tolerance
    :return: 1 for disk-disk and disk/lens-pancake edges, 2 for other disk-pancake edges,
        3 for pancake-pancake edges
    """
    a, b = objects[u], objects[v]
    if isinstance(a, UnitDisk) and isinstance(b, UnitDisk):
        return 1
    if isinstance(a, Pancake2) and isinstance(b, Pancake2):
        return 3
    disk, pancake = (a, b) if isinstance(a, UnitDisk) else (b, a)
    return 1 if is_lens(disk, pancake, tol) else 2


def geometric_cneeo_ordering(
    objects: Sequence[Pi2Object], tol: Tolerance = None, graph: Graph = None
) -> EdgeOrdering:
    """
    The geometric_cneeo_ordering function orders the edges of the intersection graph of unit
    disks and 2-pancakes in three blocks:

    1. disk-disk and disk/lens-pancake edges by non-increasing length, then index pair;
    2. the remaining disk-pancake edges by index pair;
    3. pancake-pancake edges by the shorter spine, then the longer spine, then index pair.

    In the last block an edge whose endpoint strictly contains a common neighbour comes
    after one of that neighbour's two edges.

    :param objects: unit disks and 2-pancakes
    :param tol: predicate tolerance
    :param graph: intersection graph of ``objects`` when already built
    :return: EdgeOrdering
    """
    check_pi2_objects(objects)
    tol = tol or Tolerance.default()
    g = graph if graph is not None else build_intersection_graph(objects, tol)

    blocks = {1: [], 2: [], 3: []}
    for u, v in g.edges():
        blocks[edge_class(objects, u, v, tol)].append((u, v))

    lam1 = sorted(blocks[1], key=lambda e: (-distance(objects[e[0]], objects[e[1]]), e))
    lam2 = sorted(blocks[2])

    def spine_key(e):
        la, lb = objects[e[0]].length, objects[e[1]].length
        return min(la, lb), max(la, lb), e

    lam3 = sorted(blocks[3], key=spine_key)
    logger.debug("edge blocks: %d / %d / %d", len(lam1), len(lam2), len(lam3))
    return EdgeOrdering(lam1 + lam2 + lam3)
