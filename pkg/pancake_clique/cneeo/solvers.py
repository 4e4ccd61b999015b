import logging
from typing import Sequence, Union

from pancake_clique.classes.graph import Graph, OddCycleCertificate
from pancake_clique.classes.ordering import CliqueResult, CneeoFailure
from pancake_clique.classes.shapes import Pancake2, Tolerance, UnitDisk
from pancake_clique.cneeo.extraction import clique_from_cneeo
from pancake_clique.cneeo.greedy import greedy_cneeo
from pancake_clique.cneeo.neighbourhoods import (
    disk_lens_pancake_neighbourhood,
    disk_pancakes_neighbourhood,
    fattened_spine,
    two_disks_neighbourhood,
)
from pancake_clique.cneeo.ordering import check_pi2_objects, edge_class, geometric_cneeo_ordering
from pancake_clique.exceptions import DegenerateInstance, PancakeCliqueError
from pancake_clique.graphs.cobipartite import is_cobipartite
from pancake_clique.graphs.intersection import build_intersection_graph
from pancake_clique.graphs.intervals import max_clique_intervals
from pancake_clique.graphs.matching import max_clique_cobipartite

__all__ = ["solve_pi2_geometric", "solve_pi2_robust", "solve_pi2_lemmas", "max_clique_pancakes"]

logger = logging.getLogger(__name__)

Pi2Object = Union[UnitDisk, Pancake2]


def solve_pi2_geometric(objects: Sequence[Pi2Object], tol: Tolerance = None) -> CliqueResult:
    """
    The solve_pi2_geometric function computes a maximum clique of the intersection graph of
    unit disks and 2-pancakes from the geometric CNEEO.

    :param objects: unit disks and 2-pancakes
    :param tol: predicate tolerance
    :return: CliqueResult with method ``geometric``
    """
    check_pi2_objects(objects)
    tol = tol or Tolerance.default()
    g = build_intersection_graph(objects, tol)
    ordering = geometric_cneeo_ordering(objects, tol, graph=g)
    return clique_from_cneeo(g, ordering, method="geometric")


def solve_pi2_robust(g: Graph) -> Union[CliqueResult, CneeoFailure]:
    """
    The solve_pi2_robust function works on the abstract graph alone: a greedy CNEEO followed
    by extraction. A failed greedy run certifies that g admits no CNEEO.

    :param g: the graph
    :return: CliqueResult with method ``robust``, or the CneeoFailure
    """
    ordering = greedy_cneeo(g)
    if isinstance(ordering, CneeoFailure):
        return ordering
    return clique_from_cneeo(g, ordering, method="robust")


def max_clique_pancakes(objects: Sequence[Pi2Object], indices: Sequence[int], tol: Tolerance = None):
    """
    Maximum clique among the pancakes ``objects[k]`` for ``k`` in ``indices``, through their
    fattened spines.

    :return: frozenset of object indices
    """
    indices = sorted(indices)
    best = max_clique_intervals([fattened_spine(objects[k], tol) for k in indices])
    return frozenset(indices[t] for t in best)


def solve_pi2_lemmas(objects: Sequence[Pi2Object], tol: Tolerance = None) -> CliqueResult:
    """
    The solve_pi2_lemmas function computes a maximum clique from the representation without
    any edge ordering. Candidates are

    - the best clique of pancakes only;
    - for each disk, the disk with the best clique of pancakes meeting it;
    - for each disk-disk and disk/lens-pancake edge, its endpoints with a maximum clique of
      their bounded neighbourhood, which is cobipartite.

    A clique with two disks or more contains such an edge of maximum length, whose bounded
    neighbourhood holds the rest of the clique.

    :param objects: unit disks and 2-pancakes
    :param tol: predicate tolerance
    :return: CliqueResult with method ``lemmas``
    """
    check_pi2_objects(objects)
    tol = tol or Tolerance.default()
    g = build_intersection_graph(objects, tol)

    pancakes = [k for k, o in enumerate(objects) if isinstance(o, Pancake2)]
    disks = [k for k, o in enumerate(objects) if isinstance(o, UnitDisk)]

    best = set(max_clique_pancakes(objects, pancakes, tol))
    for i in disks:
        candidate = {i} | max_clique_pancakes(objects, disk_pancakes_neighbourhood(objects, i, tol), tol)
        if len(candidate) > len(best):
            best = candidate

    for u, v in g.edges():
        if edge_class(objects, u, v, tol) != 1:
            continue
        if isinstance(objects[u], UnitDisk) and isinstance(objects[v], UnitDisk):
            nbh = two_disks_neighbourhood(objects, u, v, tol)
        elif isinstance(objects[u], UnitDisk):
            nbh = disk_lens_pancake_neighbourhood(objects, u, v, tol)
        else:
            nbh = disk_lens_pancake_neighbourhood(objects, v, u, tol)

        partition = is_cobipartite(g, nbh)
        if isinstance(partition, OddCycleCertificate):
            raise DegenerateInstance(
                f"bounded neighbourhood of edge ({u}, {v}) is not cobipartite: {partition.cycle}"
            )
        candidate = {u, v} | max_clique_cobipartite(g, nbh, partition)
        if len(candidate) > len(best):
            best = candidate

    if not g.is_clique(best):
        raise PancakeCliqueError(f"lemma solver produced a non-clique {sorted(best)}")
    logger.info("lemmas clique of size %d over %d objects", len(best), len(objects))
    return CliqueResult(tuple(best), "lemmas")
