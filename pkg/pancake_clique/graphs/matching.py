import logging
from typing import FrozenSet, Iterable, List, Mapping, Tuple

import networkx as nx

from pancake_clique.classes.graph import CobipartitePartition, Graph
from pancake_clique.exceptions import ContractViolation, PancakeCliqueError

__all__ = ["bipartite_mis", "max_clique_cobipartite", "maximum_matching_size"]

logger = logging.getLogger(__name__)


def __bipartite(left: Iterable[int], right: Iterable[int], edges: Iterable[Tuple[int, int]]) -> nx.Graph:
    b = nx.Graph()
    b.add_nodes_from(sorted(left), bipartite=0)
    b.add_nodes_from(sorted(right), bipartite=1)
    b.add_edges_from(sorted(edges))
    return b


def __independent_set(b: nx.Graph, left: List[int]) -> FrozenSet[int]:
    """
    Koenig: the complement of a minimum vertex cover built from a maximum matching.
    """
    if b.number_of_edges() == 0:
        return frozenset(b.nodes())
    top = sorted(left)
    matching = nx.bipartite.hopcroft_karp_matching(b, top_nodes=top)
    cover = nx.bipartite.to_vertex_cover(b, matching, top_nodes=top)
    return frozenset(b.nodes()) - frozenset(cover)


def maximum_matching_size(g: Graph, subset: Iterable[int], coloring: Mapping[int, int]) -> int:
    """
    :param g: the graph
    :param subset: vertex subset
    :param coloring: proper 2-colouring of the induced subgraph
    :return: number of edges of a maximum matching of the induced subgraph
    """
    vs = sorted(set(subset))
    b = __bipartite(
        [v for v in vs if coloring[v] == 0],
        [v for v in vs if coloring[v] == 1],
        g.induced_subgraph(vs).edges(),
    )
    if b.number_of_edges() == 0:
        return 0
    top = [v for v in vs if coloring[v] == 0]
    return len(nx.bipartite.hopcroft_karp_matching(b, top_nodes=top)) // 2


def bipartite_mis(g: Graph, subset: Iterable[int], coloring: Mapping[int, int]) -> FrozenSet[int]:
    """
    The bipartite_mis function computes a maximum independent set of the subgraph induced by
    ``subset`` from a maximum matching and the vertex cover it yields.

    :param g: the graph
    :param subset: vertex subset
    :param coloring: map vertex -> 0/1, a proper 2-colouring of the induced subgraph
    :return: maximum independent set
    """
    vs = sorted(set(subset))
    for v in vs:
        if coloring.get(v) not in (0, 1):
            raise ContractViolation(f"vertex {v} has no colour in {{0, 1}}")
    edges = list(g.induced_subgraph(vs).edges())
    for u, v in edges:
        if coloring[u] == coloring[v]:
            raise ContractViolation(f"improper colouring: edge ({u}, {v}) is monochromatic")

    left = [v for v in vs if coloring[v] == 0]
    right = [v for v in vs if coloring[v] == 1]
    mis = __independent_set(__bipartite(left, right, edges), left)
    if not g.is_independent(mis):
        raise PancakeCliqueError(f"vertex cover extraction produced a dependent set {sorted(mis)}")
    return mis


def max_clique_cobipartite(
    g: Graph, subset: Iterable[int], partition: CobipartitePartition
) -> FrozenSet[int]:
    """
    The max_clique_cobipartite function computes a maximum clique of a cobipartite induced
    subgraph as a maximum independent set of its bipartite complement.

    :param g: the graph
    :param subset: vertex subset
    :param partition: split of ``subset`` into two cliques
    :return: maximum clique
    """
    vs = frozenset(subset)
    if not partition.validate(g, vs):
        raise ContractViolation("partition does not split the subset into two cliques")

    left, right = sorted(partition.part1), sorted(partition.part2)
    missing = [(u, v) for u in left for v in right if not g.has_edge(u, v)]
    clique = __independent_set(__bipartite(left, right, missing), left)

    if not g.is_clique(clique):
        raise PancakeCliqueError(f"cobipartite solver returned a non-clique {sorted(clique)}")
    logger.debug("cobipartite clique of size %d in a subset of %d vertices", len(clique), len(vs))
    return clique
