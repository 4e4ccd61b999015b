import heapq
import logging
from collections import defaultdict
from typing import Tuple, Union

from pancake_clique.classes.graph import Graph, OddCycleCertificate
from pancake_clique.classes.ordering import CneeoFailure, EdgeOrdering
from pancake_clique.graphs.cobipartite import is_cobipartite

__all__ = ["is_valid_cneeo", "greedy_cneeo"]

logger = logging.getLogger(__name__)


def is_valid_cneeo(g: Graph, ordering: EdgeOrdering) -> Union[bool, Tuple[int, OddCycleCertificate]]:
    """
    The is_valid_cneeo function checks that every position's common neighbourhood induces a
    cobipartite subgraph of g (cobipartite in g itself, not in the remaining graph).

    :param g: the graph
    :param ordering: a permutation of g's edges
    :return: True, or the first violating 1-based position with its certificate
    """
    ordering.check_permutation_of(g)
    for k, _, nbh in ordering.neighbourhoods():
        witness = is_cobipartite(g, nbh)
        if isinstance(witness, OddCycleCertificate):
            logger.debug("position %d violates the cobipartite condition: %s", k, witness.cycle)
            return k, witness
    return True


def greedy_cneeo(g: Graph) -> Union[EdgeOrdering, CneeoFailure]:
    """
    The greedy_cneeo function builds an ordering by repeatedly eliminating the
    lexicographically smallest remaining edge whose common neighbourhood in the remaining
    graph is cobipartite in g.

    Common neighbourhoods only shrink as edges go, and subsets of cobipartite sets stay
    cobipartite, so an edge that qualifies keeps qualifying. Only edges whose neighbourhood
    just lost a vertex are re-tested.

    :param g: the graph
    :return: an EdgeOrdering, or a CneeoFailure when no remaining edge qualifies
    """
    adj = defaultdict(set)
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)

    def qualifies(e):
        return not isinstance(is_cobipartite(g, adj[e[0]] & adj[e[1]]), OddCycleCertificate)

    ready = []
    blocked = set()
    for e in g.edges():
        if qualifies(e):
            ready.append(e)
        else:
            blocked.add(e)
    heapq.heapify(ready)

    order = []
    while ready:
        u, v = heapq.heappop(ready)
        order.append((u, v))
        common = adj[u] & adj[v]
        adj[u].discard(v)
        adj[v].discard(u)
        for x in sorted(common):
            for e in ((min(u, x), max(u, x)), (min(v, x), max(v, x))):
                if e in blocked and qualifies(e):
                    blocked.discard(e)
                    heapq.heappush(ready, e)

    if blocked:
        remaining = tuple(sorted(blocked))
        a, b = remaining[0]
        certificate = is_cobipartite(g, adj[a] & adj[b])
        logger.info(
            "greedy elimination stuck after %d edges with %d remaining", len(order), len(remaining)
        )
        return CneeoFailure(EdgeOrdering(order), remaining, (a, b), certificate)

    logger.info("greedy elimination ordered all %d edges", len(order))
    return EdgeOrdering(order)
