from typing import FrozenSet, List

from pancake_clique.classes.graph import Graph
from pancake_clique.exceptions import OracleCapExceeded

__all__ = ["max_clique_bruteforce", "ORACLE_CAP"]

ORACLE_CAP = 40


def __popcount(x: int) -> int:
    return bin(x).count("1")


def max_clique_bruteforce(g: Graph, cap: int = ORACLE_CAP) -> FrozenSet[int]:
    """
    The max_clique_bruteforce function computes an exact maximum clique by branch-and-bound
    over bitset adjacency. Cliques are explored in lexicographic order and only strictly
    larger ones replace the incumbent, so the lexicographically smallest optimum is returned.

    :param g: the graph
    :param cap: largest accepted vertex count
    :return: maximum clique
    """
    n = g.number_of_nodes()
    if n > cap:
        raise OracleCapExceeded(f"oracle cap exceeded: {n} vertices > {cap}")

    adj = [sum(1 << w for w in g.neighbors(u)) for u in range(n)]
    best: List[int] = []
    current: List[int] = []

    def expand(candidates: int):
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        while candidates:
            if len(current) + __popcount(candidates) <= len(best):
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            current.append(v)
            expand(candidates & adj[v])
            current.pop()

    expand((1 << n) - 1)
    return frozenset(best)
