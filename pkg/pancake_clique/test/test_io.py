import gzip
import json
import os
import unittest

import networkx as nx

from pancake_clique.classes import Circle, Graph, Instance, OddCycleCertificate, Pancake2, UnitDisk
from pancake_clique.cneeo import greedy_cneeo, solve_pi2_geometric
from pancake_clique.exceptions import InstanceFormatError, InvalidOrdering
from pancake_clique.readwrite import *
from pancake_clique.transversal import middle_profile


class IOTestCase(unittest.TestCase):
    @staticmethod
    def get_instance():
        return Instance(
            objects=[UnitDisk.at(0.1, -0.3), UnitDisk.at(1.7, 0.25), Pancake2(-2.5, 3.125), Pancake2(4, 4)],
            kind="pi2",
        )

    @staticmethod
    def get_pseudodisk_instance():
        return Instance(
            objects=[Circle.at(-3, 0, 1), Circle.at(0, 0, 0.5), Circle.at(3, 0, 1), Circle.at(0, 6, 6)],
            kind="pseudodisk",
            triple=(0, 1, 2),
        )

    @staticmethod
    def write_text(path, text):
        with open(path, "w") as f:
            f.write(text)

    def test_read_write_instance(self):
        inst = self.get_instance()
        write_instance(inst, "test_instance.json")
        self.assertEqual(read_instance("test_instance.json"), inst)

        with open("test_instance.json") as f:
            doc = json.load(f)
        self.assertEqual(doc["kind"], "pi2")
        self.assertEqual(doc["objects"][0], {"kind": "unit_disk", "cx": 0.1, "cy": -0.3})
        self.assertEqual(doc["objects"][2], {"kind": "pancake", "x1": -2.5, "x2": 3.125})
        os.remove("test_instance.json")

    def test_read_write_instance_compressed(self):
        inst = self.get_pseudodisk_instance()
        write_instance(inst, "test_instance.json.gz")
        with gzip.open("test_instance.json.gz", "rt") as f:
            self.assertEqual(json.load(f)["triple"], [0, 1, 2])
        self.assertEqual(read_instance("test_instance.json.gz"), inst)
        os.remove("test_instance.json.gz")

        write_instance(inst, "test_instance.bin", compress=True)
        self.assertEqual(read_instance("test_instance.bin", compress=True), inst)
        os.remove("test_instance.bin")

    def test_graph_instance(self):
        inst = Instance(kind="graph", graph=Graph.from_networkx(nx.complete_multipartite_graph(3, 3, 3)))
        doc = instance_to_dict(inst)
        self.assertEqual(doc["graph"]["n"], 9)
        self.assertEqual(len(doc["graph"]["edges"]), 27)
        back = instance_from_dict(doc)
        self.assertEqual(back.graph.edges(), inst.graph.edges())
        self.assertEqual(len(back), 9)

    def test_malformed_instance(self):
        bad = [
            "[1, 2, 3]",
            "{not json",
            '{"kind": "pi2", "objects": [{"kind": "pancake", "x1": 2, "x2": 1}]}',
            '{"kind": "pi2", "objects": [{"kind": "unit_disk", "cx": 0}]}',
            '{"kind": "pi2", "objects": [{"kind": "unit_disk", "cx": true, "cy": 0}]}',
            '{"kind": "pi2", "objects": [{"kind": "triangle"}]}',
            '{"kind": "pi2", "objects": [{"kind": "circle", "cx": 0, "cy": 0, "r": 1}]}',
            '{"kind": "pseudodisk", "objects": [], "triple": [0, 1]}',
            '{"kind": "graph", "objects": []}',
            '{"kind": "graph", "graph": {"n": 2, "edges": [[0, 2]]}}',
            '{"kind": "spheres", "objects": []}',
        ]
        for text in bad:
            self.write_text("test_bad.json", text)
            with self.assertRaises(InstanceFormatError):
                read_instance("test_bad.json")
        os.remove("test_bad.json")

    def test_read_write_result(self):
        objects = self.get_instance().objects
        result = solve_pi2_geometric(objects)
        doc = result_to_dict(result, "geometric", 1.5, validated=True)
        self.assertEqual(doc["clique"], list(result.vertices))
        self.assertEqual(doc["size"], result.size)
        self.assertTrue(doc["validated"])

        write_result(doc, "test_result.json")
        self.assertEqual(read_result("test_result.json"), doc)
        os.remove("test_result.json")

        self.assertNotIn("validated", result_to_dict(result, "geometric", 0.0))

    def test_failure_result(self):
        g = Graph.from_networkx(nx.complete_multipartite_graph(3, 3, 3))
        doc = result_to_dict(greedy_cneeo(g), "robust", 2.0)
        self.assertIsNone(doc["clique"])
        self.assertIsNone(doc["size"])
        self.assertEqual(len(doc["certificate"]["remaining_edges"]), 27)
        self.assertEqual(doc["certificate"]["edge"], [0, 3])
        self.assertEqual(len(doc["certificate"]["odd_cycle"]), 3)

        write_result(doc, "test_result.json.gz")
        self.assertEqual(read_result("test_result.json.gz"), doc)
        os.remove("test_result.json.gz")

    def test_rejected_ordering_result(self):
        rejected = InvalidOrdering(1, OddCycleCertificate((2, 4, 6, 3, 5)))
        doc = result_to_dict(rejected, "robust", 0.5, validated=False)
        self.assertIsNone(doc["clique"])
        self.assertEqual(doc["invalid_ordering"], {"position": 1, "odd_cycle": [2, 4, 6, 3, 5]})
        self.assertIs(doc["validated"], False)

        write_result(doc, "test_result.json")
        self.assertEqual(read_result("test_result.json"), doc)
        os.remove("test_result.json")

    def test_malformed_result(self):
        for text in (
            '{"method": "robust", "clique": [0, 1], "size": 3, "elapsed_ms": 1.0}',
            '{"method": "robust", "clique": null, "size": null, "elapsed_ms": 1.0}',
            '{"method": "robust", "clique": [0]}',
        ):
            self.write_text("test_bad_result.json", text)
            with self.assertRaises(InstanceFormatError):
                read_result("test_bad_result.json")
        os.remove("test_bad_result.json")

    def test_transversal_report(self):
        triple = [UnitDisk.at(0, 0), UnitDisk.at(5, 0), UnitDisk.at(10, 0)]
        report = middle_profile(triple, resolution=64)
        doc = transversal_report_to_dict(report, triple=(4, 5, 6))
        self.assertEqual(doc["triple"], [4, 5, 6])
        self.assertEqual(doc["profile"], [1])
        self.assertEqual(doc["mode"], "one_middle")
        self.assertEqual(doc["mode_index"], 1)
        self.assertEqual(len(doc["samples"]), len(report.samples))

        write_transversal_report(report, "test_transversal.json")
        with open("test_transversal.json") as f:
            self.assertEqual(json.load(f), doc)
        os.remove("test_transversal.json")

    def test_partition(self):
        self.assertEqual(partition_to_dict({5, 3}, [4], True), {"X1": [3, 5], "X2": [4], "verified": True})
        write_partition([3], [], False, "test_partition.json")
        with open("test_partition.json") as f:
            self.assertEqual(json.load(f), {"X1": [3], "X2": [], "verified": False})
        os.remove("test_partition.json")

    def test_bench_csv(self):
        def row(n, seed, method, size, ms):
            return dict(kind="pi2", n_objects=n, seed=seed, method=method, size=size, elapsed_ms=ms, validated="true")

        rows = [
            row(20, 0, "robust", 4, 3.5),
            row(10, 1, "geometric", 3, 1.0),
            row(10, 0, "oracle", 3, 9.0),
            row(10, 0, "geometric", 3, 2.0),
        ]
        df = write_bench_csv(rows, "test_bench.csv")
        self.assertListEqual(list(df["method"]), ["geometric", "oracle", "geometric", "robust"])
        self.assertListEqual(list(df["seed"]), [0, 0, 1, 0])

        with open("test_bench.csv") as f:
            self.assertEqual(f.readline().strip(), ",".join(BENCH_COLUMNS))

        back = read_bench_csv("test_bench.csv")
        self.assertEqual(len(back), 4)
        self.assertListEqual(list(back["n_objects"]), [10, 10, 10, 20])
        os.remove("test_bench.csv")

        self.write_text("test_bench.csv", "a,b\n1,2\n")
        with self.assertRaises(InstanceFormatError):
            read_bench_csv("test_bench.csv")
        os.remove("test_bench.csv")
