from collections import defaultdict
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Optional, Set, Tuple

from pancake_clique.classes.graph import Graph, OddCycleCertificate
from pancake_clique.exceptions import ContractViolation

__all__ = ["EdgeOrdering", "CneeoFailure", "CliqueResult", "METHODS"]

METHODS = ("geometric", "robust", "oracle", "lemmas")

Edge = Tuple[int, int]


def _suffix_adjacency(edges: Iterable[Edge]) -> dict:
    adj = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


class EdgeOrdering(object):
    def __init__(self, edges: Iterable[Edge] = ()):
        """
        Total order ``e_1 .. e_m`` on the edges of a graph. Positions are 1-based.

        ``G(k)`` denotes the subgraph with edges ``e_k .. e_m`` and ``N(k)`` the common
        neighbours of the endpoints of ``e_k`` in ``G(k)``.

        :param edges: ordered vertex pairs, each edge at most once
        """
        normalised = []
        seen = set()
        for u, v in edges:
            e = (min(u, v), max(u, v))
            if e[0] == e[1]:
                raise ContractViolation(f"self-loop {e} in edge ordering")
            if e in seen:
                raise ContractViolation(f"edge {e} appears twice in the ordering")
            seen.add(e)
            normalised.append(e)
        self.__edges = tuple(normalised)
        self.__position = {e: k for k, e in enumerate(self.__edges, start=1)}

    def __len__(self) -> int:
        return len(self.__edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.__edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeOrdering) and self.__edges == other.edges

    def __hash__(self) -> int:
        return hash(self.__edges)

    def __repr__(self) -> str:
        return f"EdgeOrdering({list(self.__edges)})"

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.__edges

    def edge(self, k: int) -> Edge:
        """
        :param k: 1-based position
        :return: the edge at position k
        """
        if not 1 <= k <= len(self.__edges):
            raise IndexError(f"position {k} outside 1..{len(self.__edges)}")
        return self.__edges[k - 1]

    def position(self, u: int, v: int) -> int:
        """
        :param u: endpoint
        :param v: endpoint
        :return: 1-based position of edge {u, v}
        """
        return self.__position[(min(u, v), max(u, v))]

    def suffix_edges(self, k: int) -> Tuple[Edge, ...]:
        """Edges of G(k)."""
        return self.__edges[k - 1 :]

    def common_neighbourhood(self, k: int) -> FrozenSet[int]:
        """
        N(k) computed from scratch.

        :param k: 1-based position
        :return: common neighbours of e_k's endpoints in G(k)
        """
        u, v = self.edge(k)
        adj = _suffix_adjacency(self.suffix_edges(k))
        return frozenset(adj[u] & adj[v])

    def neighbourhoods(self) -> Iterator[Tuple[int, Edge, FrozenSet[int]]]:
        """
        Iterate ``(k, e_k, N(k))`` for every position, removing edges incrementally.

        :return: generator of triples
        """
        adj = _suffix_adjacency(self.__edges)
        for k, (u, v) in enumerate(self.__edges, start=1):
            yield k, (u, v), frozenset(adj[u] & adj[v])
            adj[u].discard(v)
            adj[v].discard(u)

    def is_permutation_of(self, g: Graph) -> bool:
        return len(self.__edges) == g.number_of_edges() and all(
            g.has_edge(u, v) for u, v in self.__edges
        )

    def check_permutation_of(self, g: Graph) -> None:
        """
        :param g: the graph
        :raise ContractViolation: when the ordering is not a permutation of g's edges
        """
        if not self.is_permutation_of(g):
            raise ContractViolation(
                f"ordering of {len(self)} edges is not a permutation of the "
                f"{g.number_of_edges()} edges of the graph"
            )


@dataclass(frozen=True)
class CneeoFailure:
    """
    Greedy elimination got stuck: no remaining edge has a cobipartite common neighbourhood.

    :param prefix: edges eliminated before the failure
    :param remaining: edges left when the greedy scan stopped, in lexicographic order
    :param edge: the remaining edge carrying the certificate
    :param certificate: odd cycle in the complement of ``edge``'s common neighbourhood
    """

    prefix: EdgeOrdering
    remaining: Tuple[Edge, ...]
    edge: Edge
    certificate: OddCycleCertificate

    def neighbourhood(self, edge: Edge) -> Set[int]:
        """Common neighbourhood of ``edge`` in the remaining graph."""
        adj = _suffix_adjacency(self.remaining)
        return adj[edge[0]] & adj[edge[1]]

    def verify(self, g: Graph) -> bool:
        """
        Check the stored certificate against g.

        :param g: the graph the greedy scan ran on
        :return: True when the certificate is a valid witness
        """
        return (
            self.edge in self.remaining
            and self.certificate.validate(g)
            and set(self.certificate.cycle) <= self.neighbourhood(self.edge)
        )

    def verify_all(self, g: Graph) -> bool:
        """
        Check that every remaining edge has a non-cobipartite common neighbourhood.

        :param g: the graph the greedy scan ran on
        :return: True when no remaining edge could have been eliminated
        """
        from pancake_clique.graphs.cobipartite import is_cobipartite

        if not self.verify(g):
            return False
        adj = _suffix_adjacency(self.remaining)
        for u, v in self.remaining:
            witness = is_cobipartite(g, adj[u] & adj[v])
            if not isinstance(witness, OddCycleCertificate):
                return False
        return True


@dataclass(frozen=True)
class CliqueResult:
    """
    :param vertices: clique vertices, sorted
    :param method: solver tag, one of ``METHODS``
    :param ordering_position: 1-based position whose neighbourhood produced the clique
    """

    vertices: Tuple[int, ...]
    method: str
    ordering_position: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        if self.method not in METHODS:
            raise ValueError(f"Unknown method {self.method!r}, expected one of {METHODS}")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        return g.is_clique(self.vertices)
