from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

__all__ = ["Graph", "CobipartitePartition", "OddCycleCertificate"]


class Graph(object):
    def __init__(self, n: int = 0, edges: Iterable[Tuple[int, int]] = None):
        """
        Undirected simple graph on the vertices ``0 .. n-1``.
        Graph instances are immutable after construction.

        :param n: number of vertices
        :param edges: iterable of vertex pairs
        """
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {n}")

        self.G = nx.Graph()
        self.G.add_nodes_from(range(n))
        self.__adj = [set() for _ in range(n)]

        if edges is not None:
            for u, v in edges:
                u, v = int(u), int(v)
                if u == v:
                    raise ValueError(f"Self-loop on vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"Edge ({u}, {v}) out of range for n={n}")
                self.G.add_edge(u, v)
                self.__adj[u].add(v)
                self.__adj[v].add(u)

        self.__adj = [frozenset(a) for a in self.__adj]

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """
        Relabel a networkx graph on ``0 .. n-1`` following sorted node order.

        :param g: networkx Graph
        :return: Graph instance
        """
        nodes = sorted(g.nodes())
        index = {u: i for i, u in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in g.edges() if u != v])

    def __len__(self) -> int:
        return len(self.__adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.number_of_nodes()}, m={self.number_of_edges()})"

    def number_of_nodes(self) -> int:
        return len(self.__adj)

    def number_of_edges(self) -> int:
        return self.G.number_of_edges()

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.__adj[u]

    def neighbors(self, u: int) -> FrozenSet[int]:
        return self.__adj[u]

    def degree(self, u: int) -> int:
        return len(self.__adj[u])

    def edges(self) -> List[Tuple[int, int]]:
        """
        Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order.

        :return: sorted list of edges
        """
        return sorted((min(u, v), max(u, v)) for u, v in self.G.edges())

    def complement_neighbors(self, u: int, subset: Iterable[int]) -> Set[int]:
        """
        Neighbours of u in the complement of the subgraph induced by ``subset``.

        :param u: a vertex of subset
        :param subset: vertex subset
        :return: set of vertices
        """
        return {w for w in subset if w != u and w not in self.__adj[u]}

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for i, u in enumerate(vs):
            for w in vs[i + 1 :]:
                if w not in self.__adj[u]:
                    return False
        return True

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for i, u in enumerate(vs):
            for w in vs[i + 1 :]:
                if w in self.__adj[u]:
                    return False
        return True

    def induced_subgraph(self, subset: Iterable[int]) -> nx.Graph:
        """
        Read-only networkx view of the subgraph induced by ``subset``.

        :param subset: vertex subset
        :return: networkx subgraph view
        """
        return self.G.subgraph(subset)

    def relabel(self, permutation: List[int]) -> "Graph":
        """
        Graph with vertex ``i`` renamed ``permutation[i]``.

        :param permutation: a permutation of ``0 .. n-1``
        :return: Graph instance
        """
        if sorted(permutation) != list(range(len(self))):
            raise ValueError("relabel expects a permutation of the vertices")
        return Graph(len(self), [(permutation[u], permutation[v]) for u, v in self.edges()])


@dataclass(frozen=True)
class CobipartitePartition:
    """Split of a vertex subset into two cliques."""

    part1: FrozenSet[int]
    part2: FrozenSet[int]

    def validate(self, g: Graph, subset: Iterable[int] = None) -> bool:
        """
        Check disjointness, coverage of ``subset`` (when given) and cliqueness of both parts.

        :param g: the graph
        :param subset: the queried subset
        :return: True when the partition is valid
        """
        if self.part1 & self.part2:
            return False
        if subset is not None and (self.part1 | self.part2) != frozenset(subset):
            return False
        return g.is_clique(self.part1) and g.is_clique(self.part2)


@dataclass(frozen=True)
class OddCycleCertificate:
    """
    Odd cycle of the complement of an induced subgraph, closing from the last
    vertex back to the first.
    """

    cycle: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def validate(self, g: Graph) -> bool:
        """
        Odd length of at least 3, distinct vertices, every consecutive pair
        (closure included) non-adjacent in g.

        :param g: the graph
        :return: True when the certificate holds
        """
        k = len(self.cycle)
        if k < 3 or k % 2 == 0 or len(set(self.cycle)) != k:
            return False
        for i in range(k):
            u, v = self.cycle[i], self.cycle[(i + 1) % k]
            if g.has_edge(u, v):
                return False
        return True
