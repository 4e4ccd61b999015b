import unittest

from pancake_clique.classes import CobipartitePartition, OddCycleCertificate, Pancake2
from pancake_clique.graphs import is_cobipartite
from pancake_clique.verification import *


class SuiteReportTestCase(unittest.TestCase):
    def test_record(self):
        report = SuiteReport("demo")
        self.assertTrue(report.ok)
        report.record(True)
        self.assertTrue(report.ok)
        report.record(False, "broken")
        self.assertFalse(report.ok)
        self.assertEqual((report.checked, report.passed, report.failures), (2, 1, ["broken"]))
        self.assertEqual(str(report), "demo: 1/2 passed, 0 skipped [FAILED]")


class FixtureTestCase(unittest.TestCase):
    def test_pi2_tilde_fixture(self):
        g, inst = pi2_tilde_fixture()
        self.assertEqual(g.neighbors(4), frozenset({0, 1}))
        self.assertFalse(g.has_edge(2, 3))
        self.assertIsInstance(is_cobipartite(g, {2, 3, 4}), OddCycleCertificate)

        self.assertIsInstance(inst.objects[4], Pancake2)
        g = inst.intersection_graph()
        self.assertEqual(g.neighbors(4), frozenset({0, 1, 2, 3}))
        self.assertIsInstance(is_cobipartite(g, {2, 3, 4}), CobipartitePartition)

        report = pi2_tilde_suite()
        self.assertTrue(report.ok)
        self.assertEqual(report.checked, 3)

    def test_random_pi2_instances(self):
        skipped = []
        draws = list(random_pi2_instances(12, seed=4, max_objects=10, skipped=skipped))
        self.assertEqual(len(draws) + len(skipped), 12)
        for _, inst in draws:
            self.assertTrue(1 <= len(inst) <= 10)
        self.assertEqual(
            [inst for _, inst in draws],
            [inst for _, inst in random_pi2_instances(12, seed=4, max_objects=10)],
        )


class SuitesTestCase(unittest.TestCase):
    def assertSuiteOk(self, report):
        self.assertTrue(report.ok, f"{report}: {report.failures[:3]}")
        self.assertGreater(report.checked, 0)

    def test_pi2_suites(self):
        self.assertSuiteOk(oracle_equivalence_suite(instances=15, seed=1, max_objects=12))
        self.assertSuiteOk(cneeo_validity_suite(instances=8, seed=2, max_objects=30))
        self.assertSuiteOk(greedy_success_suite(instances=8, seed=3, max_objects=30))
        self.assertSuiteOk(lemma_neighbourhood_suite(instances=5, seed=4, max_objects=20))

    def test_greedy_failure(self):
        report = greedy_failure_suite(instances=5, seed=0)
        self.assertSuiteOk(report)
        self.assertGreaterEqual(report.checked, 2)

    def test_geometric_suites(self):
        self.assertSuiteOk(half_lens_diameter_suite(instances=5, pairs=200))
        report = reduction_3d_suite(instances=500)
        self.assertSuiteOk(report)
        self.assertEqual(report.checked + report.skipped, 500)

    def test_pseudodisk_suites(self):
        self.assertSuiteOk(no_transversal_suite(instances=3, n_family=6))
        report = pseudodisk_bipartition_suite(instances=2, n_family=5)
        self.assertTrue(report.ok, report.failures)
        self.assertLessEqual(report.degenerate, report.drawn)
        self.assertLessEqual(report.drawn, 2)
        if report.drawn:
            self.assertIn("degenerate", str(report))

    def test_run_suites(self):
        reports = run_suites(["pi2_tilde", "half_lens"], instances=2, seed=0)
        self.assertEqual([r.name for r in reports], ["pi2_tilde_fixture", "half_lens_diameter"])
        self.assertTrue(all(r.ok for r in reports))
        self.assertIn("reduction_3d", SUITES)
        self.assertEqual(len(SUITES), 10)

        with self.assertRaises(ValueError):
            run_suites(["nope"])
