import collections
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Tuple

import networkx as nx
import numpy as np
import tqdm
from scipy.spatial.distance import pdist

from pancake_clique.classes.graph import CobipartitePartition, Graph
from pancake_clique.classes.instance import Instance
from pancake_clique.classes.ordering import CneeoFailure, EdgeOrdering
from pancake_clique.classes.reports import MiddleMode
from pancake_clique.classes.shapes import Pancake2, Point2, Tolerance, UnitDisk
from pancake_clique.cneeo.greedy import greedy_cneeo, is_valid_cneeo
from pancake_clique.cneeo.neighbourhoods import (
    disk_lens_pancake_neighbourhood,
    disk_pancakes_neighbourhood,
    two_disks_neighbourhood,
    two_pancakes_neighbourhood,
)
from pancake_clique.cneeo.ordering import geometric_cneeo_ordering
from pancake_clique.cneeo.solvers import solve_pi2_geometric, solve_pi2_lemmas, solve_pi2_robust
from pancake_clique.exceptions import DegenerateInstance, GenerationError, PancakeCliqueError
from pancake_clique.geometry.circles import half_lens_contains, segment_meets_disk
from pancake_clique.geometry.predicates import intersects, is_lens
from pancake_clique.geometry.space import ball_pancake3_gap, pancake3_intersects_unit_ball
from pancake_clique.graphs.cobipartite import is_cobipartite
from pancake_clique.graphs.intersection import build_intersection_graph
from pancake_clique.graphs.oracle import max_clique_bruteforce
from pancake_clique.models.config import GenConfig
from pancake_clique.models.random import gen_pi2, gen_pseudodisk_triple
from pancake_clique.pseudodisk.bipartition import build_bipartition, verify_bipartition

__all__ = [
    "SuiteReport",
    "SUITES",
    "random_pi2_instances",
    "pi2_tilde_fixture",
    "oracle_equivalence_suite",
    "cneeo_validity_suite",
    "greedy_success_suite",
    "greedy_failure_suite",
    "lemma_neighbourhood_suite",
    "pi2_tilde_suite",
    "half_lens_diameter_suite",
    "pseudodisk_bipartition_suite",
    "no_transversal_suite",
    "reduction_3d_suite",
    "run_suites",
]

logger = logging.getLogger(__name__)

# radius slack of pseudodisk family circles
FAMILY_SLACK = 0.3
MIN_CLASSIFIED_SHARE = 0.5
DEGENERATE_LIMIT = 0.05
# drawn instances needed before the degenerate rate is checked
DEGENERATE_SAMPLE = 20


@dataclass
class SuiteReport:
    """
    Outcome of a verification suite.

    :param name: suite name
    :param checked: number of checks run
    :param passed: number of checks that held
    :param failures: one message per failed check
    :param skipped: draws left out (generation failures, degenerate instances)
    :param drawn: instances a generating suite produced
    :param degenerate: drawn instances the checked construction rejected as degenerate
    """

    name: str
    checked: int = 0
    passed: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: int = 0
    drawn: int = 0
    degenerate: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.checked

    @property
    def degenerate_rate(self) -> float:
        return self.degenerate / self.drawn if self.drawn else 0.0

    def record(self, holds: bool, message: str = "") -> None:
        self.checked += 1
        if holds:
            self.passed += 1
        else:
            self.failures.append(message)
            logger.warning("%s: %s", self.name, message)

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAILED"
        degenerate = f", {self.degenerate_rate:.1%} degenerate" if self.drawn else ""
        return f"{self.name}: {self.passed}/{self.checked} passed, {self.skipped} skipped{degenerate} [{status}]"


def __progress(iterable, name: str, progress: bool):
    return tqdm.tqdm(iterable, desc=name, disable=not progress)


def random_pi2_instances(
    instances: int, seed: int, max_objects: int, skipped: List[int] = None
) -> Iterator[Tuple[int, Instance]]:
    """
    Seeded pi2 instances with mixed sizes, disk shares and densities.

    :param instances: number of draws
    :param seed: master seed
    :param max_objects: largest object count
    :param skipped: receives the draw numbers the generator gave up on
    :return: iterator of (draw number, Instance)
    """
    rng = np.random.default_rng(seed)
    for k in range(instances):
        n = int(rng.integers(1, max_objects + 1))
        n_disks = int(round(n * rng.uniform()))
        width = max(2.0, n * rng.uniform(0.2, 1.0))
        cfg = GenConfig(
            seed=int(rng.integers(2**31)),
            box=(width, rng.uniform(2.0, 6.0)),
            n_disks=n_disks,
            n_pancakes=n - n_disks,
        )
        try:
            yield k, gen_pi2(cfg)
        except GenerationError:
            if skipped is not None:
                skipped.append(k)


def oracle_equivalence_suite(
    instances: int = 500, seed: int = 0, progress: bool = False, max_objects: int = 24
) -> SuiteReport:
    """Geometric, robust, lemma-based and brute-force solvers agree on the clique size."""
    report = SuiteReport("oracle_equivalence")
    skipped = []
    for k, inst in __progress(random_pi2_instances(instances, seed, max_objects, skipped), report.name, progress):
        g = inst.intersection_graph()
        expected = len(max_clique_bruteforce(g))
        try:
            sizes = {
                "geometric": solve_pi2_geometric(inst.objects).size,
                "lemmas": solve_pi2_lemmas(inst.objects).size,
            }
            robust = solve_pi2_robust(g)
            sizes["robust"] = None if isinstance(robust, CneeoFailure) else robust.size
        except PancakeCliqueError as e:
            report.record(False, f"draw {k}: {type(e).__name__}: {e}")
            continue
        wrong = {m: s for m, s in sizes.items() if s != expected}
        report.record(not wrong, f"draw {k}: oracle size {expected}, got {wrong}")
    report.skipped = len(skipped)
    return report


def cneeo_validity_suite(
    instances: int = 200, seed: int = 0, progress: bool = False, max_objects: int = 200
) -> SuiteReport:
    """The geometric ordering of every pi2 instance is a valid CNEEO."""
    report = SuiteReport("cneeo_validity")
    skipped = []
    for k, inst in __progress(random_pi2_instances(instances, seed, max_objects, skipped), report.name, progress):
        g = inst.intersection_graph()
        verdict = is_valid_cneeo(g, geometric_cneeo_ordering(inst.objects, graph=g))
        report.record(verdict is True, f"draw {k}: position {verdict[0] if verdict is not True else None} fails")
    report.skipped = len(skipped)
    return report


def greedy_success_suite(
    instances: int = 200, seed: int = 0, progress: bool = False, max_objects: int = 200
) -> SuiteReport:
    """Greedy elimination finds an ordering on the abstract graph of every pi2 instance."""
    report = SuiteReport("greedy_success")
    skipped = []
    for k, inst in __progress(random_pi2_instances(instances, seed, max_objects, skipped), report.name, progress):
        outcome = greedy_cneeo(inst.intersection_graph())
        stuck = getattr(outcome, "edge", None)
        report.record(isinstance(outcome, EdgeOrdering), f"draw {k}: greedy stuck on edge {stuck}")
    report.skipped = len(skipped)
    return report


def greedy_failure_suite(
    instances: int = 200, seed: int = 0, progress: bool = False, n: int = 12, p: float = 0.8
) -> SuiteReport:
    """
    Greedy elimination fails with a fully verified certificate on complete multipartite graphs
    with parts of size 3. A seeded search over G(n, p) checks the certificate of every failure
    it meets.
    """
    report = SuiteReport("greedy_failure")
    for parts in ((3, 3, 3), (3, 3, 3, 3)):
        g = Graph.from_networkx(nx.complete_multipartite_graph(*parts))
        outcome = greedy_cneeo(g)
        report.record(
            isinstance(outcome, CneeoFailure) and outcome.verify_all(g),
            f"complete multipartite {parts}: no verified failure",
        )

    rng = np.random.default_rng(seed)
    found = 0
    for _ in __progress(range(instances), report.name, progress):
        g = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31))))
        outcome = greedy_cneeo(g)
        if isinstance(outcome, CneeoFailure):
            found += 1
            report.record(outcome.verify(g), f"random graph {g.edges()}: certificate does not verify")
    logger.info("greedy failed on %d of %d G(%d, %s) graphs", found, instances, n, p)
    return report


def lemma_neighbourhood_suite(
    instances: int = 200, seed: int = 0, progress: bool = False, max_objects: int = 200
) -> SuiteReport:
    """Every bounded neighbourhood of the four neighbourhood lemmas induces a cobipartite graph."""
    report = SuiteReport("lemma_neighbourhoods")
    skipped = []
    tol = Tolerance.default()
    for k, inst in __progress(random_pi2_instances(instances, seed, max_objects, skipped), report.name, progress):
        objects = inst.objects
        g = build_intersection_graph(objects, tol)
        queries = []
        for i, o in enumerate(objects):
            if isinstance(o, UnitDisk):
                queries.append((f"disk {i}", disk_pancakes_neighbourhood(objects, i, tol)))
        for u, v in g.edges():
            a, b = objects[u], objects[v]
            if isinstance(a, UnitDisk) and isinstance(b, UnitDisk):
                queries.append((f"disks {u},{v}", two_disks_neighbourhood(objects, u, v, tol)))
            elif isinstance(a, Pancake2) and isinstance(b, Pancake2):
                queries.append((f"pancakes {u},{v}", two_pancakes_neighbourhood(objects, u, v, tol)))
            else:
                i, j = (u, v) if isinstance(a, UnitDisk) else (v, u)
                if is_lens(objects[i], objects[j], tol):
                    queries.append((f"disk {i} lens {j}", disk_lens_pancake_neighbourhood(objects, i, j, tol)))
        for what, nbh in queries:
            witness = is_cobipartite(g, nbh)
            report.record(
                isinstance(witness, CobipartitePartition) and witness.validate(g, nbh),
                f"draw {k}, {what}: neighbourhood is not cobipartite",
            )
    report.skipped = len(skipped)
    return report


def pi2_tilde_fixture() -> Tuple[Graph, Instance]:
    """
    Two intersecting unit disks, two disks above and below their overlap, and the segment
    ``[-2, 3.6]`` of the x-axis: once as a bare segment and once fattened into a pancake.

    :return: (graph with the bare segment as vertex 4, pi2 instance with the pancake as object 4)
    """
    disks = [UnitDisk.at(0.0, 0.0), UnitDisk.at(1.6, 0.0), UnitDisk.at(0.8, 1.38), UnitDisk.at(0.8, -1.38)]
    a, b = Point2(-2.0, 0.0), Point2(3.6, 0.0)
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4) if intersects(disks[i], disks[j])]
    edges += [(i, 4) for i in range(4) if segment_meets_disk(a, b, disks[i].as_circle())]
    return Graph(5, edges), Instance(objects=disks + [Pancake2(-2.0, 3.6)], kind="pi2")


def pi2_tilde_suite(instances: int = 1, seed: int = 0, progress: bool = False) -> SuiteReport:
    """The bare segment breaks the two-disk neighbourhood lemma, the pancake restores it."""
    report = SuiteReport("pi2_tilde_fixture")
    g_segment, inst = pi2_tilde_fixture()
    nbh = frozenset({2, 3, 4})
    witness = is_cobipartite(g_segment, nbh)
    report.record(
        not isinstance(witness, CobipartitePartition) and witness.validate(g_segment),
        "bare segment: neighbourhood of the disk edge is cobipartite",
    )
    g = inst.intersection_graph()
    fattened = two_disks_neighbourhood(inst.objects, 0, 1)
    report.record(fattened == nbh, f"pancake: neighbourhood {sorted(fattened)} differs from {sorted(nbh)}")
    report.record(
        isinstance(is_cobipartite(g, fattened), CobipartitePartition),
        "pancake: neighbourhood of the disk edge is not cobipartite",
    )
    return report


def half_lens_diameter_suite(
    instances: int = 100, seed: int = 0, progress: bool = False, pairs: int = 10**4
) -> SuiteReport:
    """
    Points of one half-lens of the disks ``(c, rho)`` and ``(c2, rho2)`` with
    ``|c - c2| = rho <= rho2`` are within ``rho2`` of each other.
    """
    report = SuiteReport("half_lens_diameter")
    rng = np.random.default_rng(seed)
    per_side = int(math.ceil(math.sqrt(2 * pairs))) + 1
    for k in __progress(range(instances), report.name, progress):
        rho = rng.uniform(0.5, 2.0)
        rho2 = rho * rng.uniform(1.0, 2.0)
        angle = rng.uniform(0.0, 2.0 * math.pi)
        c = Point2(*rng.uniform(-5.0, 5.0, size=2))
        c2 = c + Point2(math.cos(angle), math.sin(angle)) * rho
        for side in ("upper", "lower"):
            kept = []
            while len(kept) < per_side:
                r, phi = rho * math.sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * math.pi)
                q = c + Point2(math.cos(phi), math.sin(phi)) * r
                if half_lens_contains(c, rho, c2, rho2, q, side):
                    kept.append(q.as_tuple())
            diameter = float(pdist(np.array(kept)).max())
            report.record(diameter <= rho2 + 1e-9, f"configuration {k} {side}: diameter {diameter} > {rho2}")
    return report


def __pseudodisk_instances(instances: int, seed: int, n_family: int, modes, skipped: List[int], **options):
    rng = np.random.default_rng(seed)
    for k in range(instances):
        mode = modes[k % len(modes)]
        cfg = GenConfig(seed=int(rng.integers(2**31)), n_family=n_family, mode=mode, **options)
        try:
            yield k, mode, gen_pseudodisk_triple(cfg)
        except GenerationError:
            skipped.append(k)


def pseudodisk_bipartition_suite(
    instances: int = 200, seed: int = 0, progress: bool = False, n_family: int = 12
) -> SuiteReport:
    """
    The family of a pseudodisk instance induces a cobipartite graph, and the bipartition
    built from the triple splits it into two cliques.

    Families hold no container of a triple circle and barely reach the triple
    (``FAMILY_SLACK``), so every member goes through the case analysis. Per middle mode, at
    least ``MIN_CLASSIFIED_SHARE`` of the members of verified instances must be
    non-containers. Degenerate instances are skipped; once ``DEGENERATE_SAMPLE`` instances
    were drawn their share must stay below ``DEGENERATE_LIMIT``.
    """
    report = SuiteReport("pseudodisk_bipartition")
    skipped = []
    members = collections.Counter()
    classified = collections.Counter()
    draws = __pseudodisk_instances(
        instances, seed, n_family, MiddleMode.TAGS, skipped, family_slack=FAMILY_SLACK, containers=False
    )
    for k, mode, inst in __progress(draws, report.name, progress):
        report.drawn += 1
        family, t = inst.family, inst.triple_circles
        g = build_intersection_graph(family)
        report.record(
            isinstance(is_cobipartite(g, range(len(family))), CobipartitePartition),
            f"draw {k} ({mode}): family graph is not cobipartite",
        )
        try:
            x1, x2 = build_bipartition(t, family)
        except DegenerateInstance as e:
            logger.info("draw %d (%s) degenerate: %s", k, mode, e)
            report.degenerate += 1
            skipped.append(k)
            continue
        report.record(verify_bipartition(family, x1, x2), f"draw {k} ({mode}): parts {sorted(x1)} {sorted(x2)}")
        members[mode] += len(family)
        classified[mode] += sum(1 for d in family if not any(d.contains_circle(c) for c in t))

    for mode in sorted(members):
        share = classified[mode] / members[mode] if members[mode] else 1.0
        report.record(
            share >= MIN_CLASSIFIED_SHARE,
            f"{mode}: {classified[mode]} of {members[mode]} members classified, below {MIN_CLASSIFIED_SHARE:.0%}",
        )
    if report.drawn >= DEGENERATE_SAMPLE:
        report.record(
            report.degenerate_rate < DEGENERATE_LIMIT,
            f"degenerate rate {report.degenerate_rate:.1%} ({report.degenerate}/{report.drawn})",
        )
    report.skipped = len(skipped)
    logger.info("%s: classified members per mode %s", report.name, dict(classified))
    return report


def no_transversal_suite(
    instances: int = 100, seed: int = 0, progress: bool = False, n_family: int = 12
) -> SuiteReport:
    """Without a line transversal of the triple, the family members meet pairwise."""
    report = SuiteReport("no_transversal")
    skipped = []
    for k, _, inst in __progress(
        __pseudodisk_instances(instances, seed, n_family, (MiddleMode.NO_TRANSVERSAL,), skipped), report.name, progress
    ):
        family = inst.family
        pairs = itertools.combinations(range(len(family)), 2)
        missing = [(a, b) for a, b in pairs if not intersects(family[a], family[b])]
        report.record(not missing, f"draw {k}: disjoint family pairs {missing}")
    report.skipped = len(skipped)
    return report


def reduction_3d_suite(
    instances: int = 10**4, seed: int = 0, progress: bool = False, margin: float = 1e-4
) -> SuiteReport:
    """
    The planar test for unit balls against 3-pancakes agrees with a numeric closest-point
    search. Draws within ``margin`` of tangency are skipped.
    """
    report = SuiteReport("reduction_3d")
    rng = np.random.default_rng(seed)
    for k in __progress(range(instances), report.name, progress):
        ball = rng.uniform(-4.0, 4.0, size=3)
        base = Point2(*rng.uniform(-1.0, 1.0, size=2))
        rho = rng.uniform(0.0, 2.0)
        gap = ball_pancake3_gap(ball, base, rho)
        if abs(gap - 2.0) < margin:
            report.skipped += 1
            continue
        got = pancake3_intersects_unit_ball(ball, base, rho)
        report.record(got == (gap <= 2.0), f"draw {k}: planar test {got}, closest distance {gap}")
    return report


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "oracle": oracle_equivalence_suite,
    "cneeo": cneeo_validity_suite,
    "greedy": greedy_success_suite,
    "greedy_failure": greedy_failure_suite,
    "lemmas": lemma_neighbourhood_suite,
    "pi2_tilde": pi2_tilde_suite,
    "half_lens": half_lens_diameter_suite,
    "pseudodisk": pseudodisk_bipartition_suite,
    "no_transversal": no_transversal_suite,
    "reduction_3d": reduction_3d_suite,
}


def run_suites(names, instances: int = None, seed: int = 0, progress: bool = False) -> List[SuiteReport]:
    """
    Run the named suites.

    :param names: suite names from ``SUITES``, or ``["all"]``
    :param instances: draws per suite, the suite default when None
    :param seed: master seed
    :param progress: show progress bars
    :return: one SuiteReport per suite
    """
    if list(names) == ["all"]:
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}, expected one of {sorted(SUITES)}")
        kwargs = {"seed": seed, "progress": progress}
        if instances is not None:
            kwargs["instances"] = instances
        reports.append(SUITES[name](**kwargs))
        logger.info("%s", reports[-1])
    return reports
