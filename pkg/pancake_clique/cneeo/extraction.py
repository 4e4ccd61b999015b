import logging

from pancake_clique.classes.graph import Graph, OddCycleCertificate
from pancake_clique.classes.ordering import CliqueResult, EdgeOrdering
from pancake_clique.exceptions import InvalidOrdering, PancakeCliqueError
from pancake_clique.graphs.cobipartite import is_cobipartite
from pancake_clique.graphs.matching import max_clique_cobipartite

__all__ = ["clique_from_cneeo"]

logger = logging.getLogger(__name__)


def clique_from_cneeo(g: Graph, ordering: EdgeOrdering, method: str = "robust") -> CliqueResult:
    """
    The clique_from_cneeo function extracts a maximum clique from a CNEEO.

    The first edge of any clique of size at least 2 places every other member in that edge's
    common neighbourhood, so the best of ``{u, v}`` plus a maximum clique of ``N(k)`` over
    all positions is optimal. Ties keep the smallest position.

    :param g: the graph
    :param ordering: a CNEEO of g
    :param method: tag stored in the result
    :return: CliqueResult
    :raise InvalidOrdering: when a position's neighbourhood is not cobipartite
    """
    ordering.check_permutation_of(g)

    best, best_k = None, None
    for k, (u, v), nbh in ordering.neighbourhoods():
        partition = is_cobipartite(g, nbh)
        if isinstance(partition, OddCycleCertificate):
            raise InvalidOrdering(k, partition)
        candidate = {u, v} | max_clique_cobipartite(g, nbh, partition)
        logger.debug("position %d edge (%d, %d): candidate of size %d", k, u, v, len(candidate))
        if best is None or len(candidate) > len(best):
            best, best_k = candidate, k

    if best is None:
        best = {0} if g.number_of_nodes() > 0 else set()

    if not g.is_clique(best):
        raise PancakeCliqueError(f"extracted vertex set {sorted(best)} is not a clique")
    logger.info("%s clique of size %d from %d positions", method, len(best), len(ordering))
    return CliqueResult(tuple(best), method, best_k)
