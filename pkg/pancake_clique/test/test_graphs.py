import itertools
import unittest

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from pancake_clique.classes import (Circle, CobipartitePartition, ConvexPolygon, Graph, OddCycleCertificate, Pancake2,
                                    UnitDisk)
from pancake_clique.exceptions import ContractViolation, OracleCapExceeded
from pancake_clique.geometry import intersects
from pancake_clique.graphs import *


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=7))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def scenes(draw):
    """Unit disks and 2-pancakes on a small strip, dense enough to share many edges."""
    coordinate = st.floats(min_value=-4, max_value=4)
    objects = []
    for _ in range(draw(st.integers(min_value=0, max_value=9))):
        if draw(st.booleans()):
            objects.append(UnitDisk.at(draw(coordinate), draw(st.floats(min_value=-2, max_value=2))))
        else:
            x1 = draw(coordinate)
            objects.append(Pancake2(x1, x1 + draw(st.floats(min_value=0, max_value=3))))
    return objects


class GraphTestCase(unittest.TestCase):
    @staticmethod
    def path():
        return Graph(3, [(0, 1), (1, 2)])

    def test_graph(self):
        g = self.path()
        self.assertEqual(g.number_of_nodes(), 3)
        self.assertEqual(g.number_of_edges(), 2)
        self.assertTrue(g.has_edge(1, 0))
        self.assertFalse(g.has_edge(0, 2))
        self.assertEqual(g.edges(), [(0, 1), (1, 2)])
        self.assertEqual(g.complement_neighbors(0, [0, 1, 2]), {2})
        self.assertTrue(g.is_clique([0, 1]))
        self.assertTrue(g.is_independent([0, 2]))

        with self.assertRaises(ValueError):
            Graph(2, [(0, 0)])
        with self.assertRaises(ValueError):
            Graph(2, [(0, 2)])

    def test_from_networkx(self):
        g = Graph.from_networkx(nx.petersen_graph())
        self.assertEqual(g.number_of_nodes(), 10)
        self.assertEqual(g.number_of_edges(), 15)


class IntersectionGraphTestCase(unittest.TestCase):
    def test_trivial(self):
        self.assertEqual(build_intersection_graph([]).number_of_nodes(), 0)
        g = build_intersection_graph([UnitDisk.at(0, 0)])
        self.assertEqual((g.number_of_nodes(), g.number_of_edges()), (1, 0))

    def test_fattened_segment(self):
        objects = [
            UnitDisk.at(0, 0),
            UnitDisk.at(1.6, 0),
            UnitDisk.at(0.8, 1.4),
            UnitDisk.at(0.8, -1.4),
            Pancake2(-2, 3.6),
        ]
        g = build_intersection_graph(objects)
        self.assertEqual(g.neighbors(4), frozenset({0, 1, 2, 3}))
        self.assertFalse(g.has_edge(2, 3))
        self.assertTrue(g.has_edge(0, 1))

    @staticmethod
    def all_pairs_edges(objects):
        return [(i, j) for i, j in itertools.combinations(range(len(objects)), 2) if intersects(objects[i], objects[j])]

    @given(scenes())
    @settings(max_examples=100, deadline=None)
    def test_sweep_matches_all_pairs(self, objects):
        self.assertEqual(build_intersection_graph(objects).edges(), self.all_pairs_edges(objects))

    @given(scenes().flatmap(lambda objects: st.tuples(st.just(objects), st.permutations(range(len(objects))))))
    @settings(max_examples=100, deadline=None)
    def test_order_stability(self, drawn):
        objects, permutation = drawn
        moved = [None] * len(objects)
        for i, o in enumerate(objects):
            moved[permutation[i]] = o
        g = build_intersection_graph(objects)
        self.assertEqual(build_intersection_graph(moved).edges(), g.relabel(list(permutation)).edges())

    def test_x_extent(self):
        self.assertEqual(x_extent(UnitDisk.at(2, 5)), (1.0, 3.0))
        self.assertEqual(x_extent(Pancake2(-1, 4)), (-2.0, 5.0))
        self.assertEqual(x_extent(Circle.at(0, 0, 2.5)), (-2.5, 2.5))
        self.assertEqual(x_extent(ConvexPolygon.from_coordinates([(0, 0), (2, 1), (1, 3)])), (0.0, 2.0))
        with self.assertRaises(ContractViolation):
            x_extent("disk")


class CobipartiteTestCase(unittest.TestCase):
    def test_cobipartite(self):
        k4 = Graph.from_networkx(nx.complete_graph(4))
        partition = is_cobipartite(k4, range(4))
        self.assertIsInstance(partition, CobipartitePartition)
        self.assertTrue(partition.validate(k4, range(4)))

        c5 = Graph.from_networkx(nx.cycle_graph(5))
        cert = is_cobipartite(c5, range(5))
        self.assertIsInstance(cert, OddCycleCertificate)
        self.assertTrue(cert.validate(c5))

        empty = Graph(3)
        cert = is_cobipartite(empty, range(3))
        self.assertIsInstance(cert, OddCycleCertificate)
        self.assertEqual(len(cert), 3)
        self.assertTrue(cert.validate(empty))

    def test_subset(self):
        c5 = Graph.from_networkx(nx.cycle_graph(5))
        partition = is_cobipartite(c5, [0, 1, 2])
        self.assertIsInstance(partition, CobipartitePartition)
        self.assertEqual(partition.part1 | partition.part2, frozenset({0, 1, 2}))
        self.assertEqual(is_cobipartite(c5, []), CobipartitePartition(frozenset(), frozenset()))

    def test_complement_coloring(self):
        coloring = complement_coloring(Graph(3, [(0, 2)]), [0, 1, 2])
        self.assertEqual(coloring, {0: 0, 1: 1, 2: 0})

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_matches_exhaustive_search(self, g):
        n = g.number_of_nodes()
        expected = any(
            g.is_clique(part) and g.is_clique([v for v in range(n) if v not in part])
            for k in range(n + 1)
            for part in itertools.combinations(range(n), k)
        )
        outcome = is_cobipartite(g, range(n))
        self.assertEqual(isinstance(outcome, CobipartitePartition), expected)
        if expected:
            self.assertTrue(outcome.validate(g, range(n)))
        else:
            self.assertTrue(outcome.validate(g))


class MatchingTestCase(unittest.TestCase):
    def test_bipartite_mis(self):
        path = Graph(3, [(0, 1), (1, 2)])
        self.assertEqual(bipartite_mis(path, [0, 1, 2], {0: 0, 1: 1, 2: 0}), frozenset({0, 2}))

        k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        coloring = {v: int(v >= 3) for v in range(6)}
        mis = bipartite_mis(k33, range(6), coloring)
        self.assertEqual(len(mis), 3)
        self.assertIn(mis, (frozenset({0, 1, 2}), frozenset({3, 4, 5})))

        n = 5
        matching = Graph(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])
        coloring = {v: v % 2 for v in range(2 * n)}
        self.assertEqual(len(bipartite_mis(matching, range(2 * n), coloring)), n)
        self.assertEqual(maximum_matching_size(matching, range(2 * n), coloring), n)

    def test_improper_coloring(self):
        path = Graph(3, [(0, 1), (1, 2)])
        with self.assertRaises(ContractViolation):
            bipartite_mis(path, [0, 1, 2], {0: 0, 1: 0, 2: 1})
        with self.assertRaises(ContractViolation):
            bipartite_mis(path, [0, 1, 2], {0: 0, 1: 1})

    def test_max_clique_cobipartite(self):
        k4 = Graph.from_networkx(nx.complete_graph(4))
        self.assertEqual(len(max_clique_cobipartite(k4, range(4), is_cobipartite(k4, range(4)))), 4)

        g = Graph(3, [(0, 2)])
        self.assertEqual(max_clique_cobipartite(g, range(3), is_cobipartite(g, range(3))), frozenset({0, 2}))

        triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        clique = max_clique_cobipartite(triangles, range(6), is_cobipartite(triangles, range(6)))
        self.assertEqual(len(clique), 3)
        self.assertTrue(triangles.is_clique(clique))

        with self.assertRaises(ContractViolation):
            max_clique_cobipartite(g, range(3), CobipartitePartition(frozenset({0, 1}), frozenset({2})))


class OracleTestCase(unittest.TestCase):
    def test_bruteforce(self):
        self.assertEqual(max_clique_bruteforce(Graph.from_networkx(nx.cycle_graph(5))), frozenset({0, 1}))
        self.assertEqual(len(max_clique_bruteforce(Graph.from_networkx(nx.complete_graph(5)))), 5)
        self.assertEqual(len(max_clique_bruteforce(Graph.from_networkx(nx.petersen_graph()))), 2)
        self.assertEqual(max_clique_bruteforce(Graph(0)), frozenset())
        self.assertEqual(max_clique_bruteforce(Graph(3)), frozenset({0}))

    def test_cap(self):
        with self.assertRaises(OracleCapExceeded):
            max_clique_bruteforce(Graph(ORACLE_CAP + 1))
        self.assertEqual(len(max_clique_bruteforce(Graph(5), cap=5)), 1)

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_matches_networkx(self, g):
        expected = max((len(c) for c in nx.find_cliques(g.G)), default=0)
        clique = max_clique_bruteforce(g)
        self.assertEqual(len(clique), expected)
        self.assertTrue(g.is_clique(clique))


class IntervalsTestCase(unittest.TestCase):
    def test_max_clique_intervals(self):
        self.assertEqual(max_clique_intervals([(0, 1), (1, 2), (3, 4)]), frozenset({0, 1}))
        self.assertEqual(max_clique_intervals([(0, 10), (2, 3), (2.5, 4), (5, 6)]), frozenset({0, 1, 2}))
        self.assertEqual(max_clique_intervals([]), frozenset())

        with self.assertRaises(ValueError):
            max_clique_intervals([(2, 1)])
