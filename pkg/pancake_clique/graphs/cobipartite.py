from collections import deque
from typing import Dict, Iterable, List, Union

from pancake_clique.classes.graph import CobipartitePartition, Graph, OddCycleCertificate

__all__ = ["is_cobipartite", "complement_coloring"]


def __tree_path(parent: Dict[int, int], v: int) -> List[int]:
    path = [v]
    while parent[v] is not None:
        v = parent[v]
        path.append(v)
    return path


def __odd_cycle(parent: Dict[int, int], u: int, w: int) -> OddCycleCertificate:
    """
    u and w are complement-adjacent with the same BFS colour: close the two tree paths
    at their lowest common ancestor.
    """
    pu = __tree_path(parent, u)
    pw = __tree_path(parent, w)
    on_pw = set(pw)
    lca = next(v for v in pu if v in on_pw)
    up = pu[: pu.index(lca) + 1]
    wp = pw[: pw.index(lca)]
    return OddCycleCertificate(tuple(reversed(up)) + tuple(wp))


def complement_coloring(g: Graph, subset: Iterable[int]) -> Union[Dict[int, int], OddCycleCertificate]:
    """
    BFS 2-colouring of the complement of the subgraph induced by ``subset``.
    Components are rooted at their smallest vertex, which gets colour 0.

    :param g: the graph
    :param subset: vertex subset
    :return: colour map (0/1) or an odd cycle of complement edges
    """
    vertices = sorted(set(subset))
    colour: Dict[int, int] = {}
    parent: Dict[int, int] = {}

    for root in vertices:
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.complement_neighbors(u, vertices)):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return __odd_cycle(parent, u, w)
    return colour


def is_cobipartite(g: Graph, subset: Iterable[int]) -> Union[CobipartitePartition, OddCycleCertificate]:
    """
    The is_cobipartite function decides whether ``subset`` splits into two cliques of g.

    :param g: the graph
    :param subset: vertex subset
    :return: a CobipartitePartition, or an OddCycleCertificate when the complement of the
        induced subgraph is not bipartite
    """
    coloring = complement_coloring(g, subset)
    if isinstance(coloring, OddCycleCertificate):
        return coloring
    return CobipartitePartition(
        frozenset(v for v, c in coloring.items() if c == 0),
        frozenset(v for v, c in coloring.items() if c == 1),
    )
