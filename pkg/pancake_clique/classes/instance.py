from dataclasses import dataclass
from typing import Optional, Tuple

from pancake_clique.classes.graph import Graph
from pancake_clique.classes.shapes import Circle, GeomObject, Pancake2, Tolerance, UnitDisk
from pancake_clique.exceptions import ContractViolation

__all__ = ["Instance", "INSTANCE_KINDS"]

INSTANCE_KINDS = ("pi2", "pseudodisk", "graph")


@dataclass(frozen=True)
class Instance:
    """
    A problem instance.

    - ``pi2``: unit disks and 2-pancakes.
    - ``pseudodisk``: circles; ``triple`` names three pairwise disjoint circles and every other
      circle (the family) meets all three.
    - ``graph``: an abstract graph with no geometry.

    :param objects: geometric objects, indexed by position
    :param kind: one of ``INSTANCE_KINDS``
    :param triple: indices of the triple (pseudodisk only)
    :param graph: the abstract graph (graph only)
    """

    objects: Tuple[GeomObject, ...] = ()
    kind: str = "pi2"
    triple: Optional[Tuple[int, int, int]] = None
    graph: Optional[Graph] = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        if self.triple is not None:
            object.__setattr__(self, "triple", tuple(int(i) for i in self.triple))

        if self.kind not in INSTANCE_KINDS:
            raise ContractViolation(f"Unknown instance kind {self.kind!r}")
        if self.kind == "pi2":
            for i, o in enumerate(self.objects):
                if not isinstance(o, (UnitDisk, Pancake2)):
                    raise ContractViolation(f"pi2 object {i} is a {type(o).__name__}")
        elif self.kind == "pseudodisk":
            for i, o in enumerate(self.objects):
                if not isinstance(o, Circle):
                    raise ContractViolation(f"pseudodisk object {i} is a {type(o).__name__}")
            if self.triple is None or len(self.triple) != 3 or len(set(self.triple)) != 3:
                raise ContractViolation(f"pseudodisk instances need 3 distinct triple indices, got {self.triple}")
            if any(not 0 <= i < len(self.objects) for i in self.triple):
                raise ContractViolation(f"triple indices {self.triple} out of range")
        elif self.graph is None:
            raise ContractViolation("graph instances need a graph")

        if self.kind != "pseudodisk" and self.triple is not None:
            raise ContractViolation("only pseudodisk instances carry a triple")

    def __len__(self) -> int:
        if self.kind == "graph":
            return self.graph.number_of_nodes()
        return len(self.objects)

    def intersection_graph(self, tol: Tolerance = None) -> Graph:
        """
        The abstract graph, or the intersection graph of the objects.

        :param tol: predicate tolerance
        :return: Graph instance
        """
        if self.kind == "graph":
            return self.graph
        from pancake_clique.graphs.intersection import build_intersection_graph

        return build_intersection_graph(self.objects, tol)

    @property
    def triple_circles(self) -> Tuple[Circle, Circle, Circle]:
        return tuple(self.objects[i] for i in self.triple)

    @property
    def family_indices(self) -> Tuple[int, ...]:
        """Object indices outside the triple, increasing."""
        return tuple(i for i in range(len(self.objects)) if i not in self.triple)

    @property
    def family(self) -> Tuple[Circle, ...]:
        return tuple(self.objects[i] for i in self.family_indices)

    def validate(self, tol: Tolerance = None) -> None:
        """
        Eager geometric checks for pseudodisk instances: disjoint triple, fully intersecting family.

        :param tol: predicate tolerance
        :raise ContractViolation: when a check fails
        """
        if self.kind != "pseudodisk":
            return
        from pancake_clique.geometry.predicates import intersects

        t = self.triple_circles
        for a in range(3):
            for b in range(a + 1, 3):
                if intersects(t[a], t[b], tol):
                    raise ContractViolation(f"triple circles {self.triple[a]} and {self.triple[b]} intersect")
        for j, c in zip(self.family_indices, self.family):
            for k, d in zip(self.triple, t):
                if not intersects(c, d, tol):
                    raise ContractViolation(f"family circle {j} misses triple circle {k}")
