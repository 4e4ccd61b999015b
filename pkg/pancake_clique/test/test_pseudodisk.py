import itertools
import unittest

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pancake_clique.classes import Circle, DiskCase, Line2, MiddleMode, Point2, TangentShape
from pancake_clique.exceptions import ContractViolation, DegenerateInstance, GenerationError
from pancake_clique.geometry import contains_cap, intersects
from pancake_clique.models import GenConfig, gen_pseudodisk_triple
from pancake_clique.pseudodisk import *
from pancake_clique.pseudodisk.lenses import lens_samples, nearest_lens_point, segment_distances
from pancake_clique.transversal import middle_profile

ALL_THREE = MiddleMode(MiddleMode.ALL_THREE)
ONE_MIDDLE = MiddleMode(MiddleMode.ONE_MIDDLE, 1)

coordinate = st.floats(min_value=-6, max_value=6, allow_nan=False, allow_infinity=False)


class TripleTestCase(unittest.TestCase):
    def test_checks(self):
        self.assertEqual(other_indices(1), (0, 2))
        with self.assertRaises(ContractViolation):
            other_indices(3)
        with self.assertRaises(ContractViolation):
            check_triple([Circle.at(0, 0, 1), Circle.at(1.5, 0, 1), Circle.at(9, 0, 1)])
        with self.assertRaises(ContractViolation):
            check_family([Circle.at(0, 0, 1), Circle.at(4, 0, 1), Circle.at(9, 0, 1)], [Circle.at(0, 5, 1)])

    def test_classify_middle_mode(self):
        collinear = [Circle.at(-3, 0, 1), Circle.at(0, 0, 0.5), Circle.at(3, 0, 1)]
        self.assertEqual(classify_middle_mode(collinear, resolution=256), ONE_MIDDLE)
        spread = [Circle.at(0, 0, 1), Circle.at(10, 0, 1), Circle.at(5, 8, 1)]
        self.assertEqual(classify_middle_mode(spread, resolution=256).tag, MiddleMode.NO_TRANSVERSAL)


class TangentShapeTestCase(unittest.TestCase):
    @staticmethod
    def triple(q):
        return [Circle.at(0, 0, 1), q, Circle.at(6.58, 0.19, 1.7)]

    def test_shapes(self):
        shape = tangent_shape(self.triple(Circle.at(4, -0.6, 0.6)), 1)
        self.assertEqual(shape.tag, TangentShape.CONTAINED)
        self.assertEqual(shape.others, (0, 2))
        self.assertIsNone(shape.tau)

        shape = tangent_shape(self.triple(Circle.at(3.5, 2.5, 1.6)), 1)
        self.assertEqual(shape.tag, TangentShape.ONE_INTERSECTING)
        self.assertIn(shape.tau, shape.tangents)

        shape = tangent_shape(self.triple(Circle.at(2.9, 0.3, 1.75)), 1)
        self.assertEqual(shape.tag, TangentShape.TWO_INTERSECTING)

    def test_tangents_touch_outer_circles(self):
        t = self.triple(Circle.at(4, -0.6, 0.6))
        for line in tangent_shape(t, 1).tangents:
            self.assertAlmostEqual(line.signed_distance(t[0].center), t[0].radius)
            self.assertAlmostEqual(line.signed_distance(t[2].center), t[2].radius)

    def test_outside_region(self):
        with self.assertRaises(ContractViolation):
            tangent_shape([Circle.at(0, 0, 1), Circle.at(-5, 0, 0.5), Circle.at(5, 0, 1)], 1)


class ContainmentTestCase(unittest.TestCase):
    @staticmethod
    def centred_triple():
        return [Circle.at(-4, 0, 1), Circle.at(0, 1.5, 1), Circle.at(4, 0, 1)]

    @staticmethod
    def lopsided_triple():
        return [Circle.at(-6, 0, 1), Circle.at(0, 1.5, 1), Circle.at(-2.5, 0, 1)]

    def test_outside_containing(self):
        t = self.centred_triple()
        shape = tangent_shape(t, 1)
        self.assertEqual(shape.tag, TangentShape.ONE_INTERSECTING)
        self.assertTrue(is_outside_containing(Circle.at(0, 100.8, 100), t, 1, shape))
        self.assertFalse(is_outside_containing(Circle.at(0, -98.8, 100), t, 1, shape))
        self.assertTrue(is_outside_containing(Circle.at(0, 1, 5), t, 1, shape))

    def test_centred(self):
        dp = Circle.at(0, 100.8, 100)
        t = self.centred_triple()
        self.assertTrue(is_centred(dp, t, 1, tangent_shape(t, 1)))

        t = self.lopsided_triple()
        shape = tangent_shape(t, 1)
        self.assertTrue(is_outside_containing(dp, t, 1, shape))
        self.assertFalse(is_centred(dp, t, 1, shape))

        # no boundary crossing with the middle circle
        t = self.centred_triple()
        self.assertFalse(is_centred(Circle.at(0, 1, 5), t, 1, tangent_shape(t, 1)))

    def test_contract(self):
        t = self.centred_triple()
        shape = tangent_shape(t, 1)
        with self.assertRaises(ContractViolation):
            is_outside_containing(Circle.at(0, 20, 1), t, 1, shape)
        with self.assertRaises(ContractViolation):
            is_outside_containing(Circle.at(0, 100.8, 100), t, 0, shape)
        with self.assertRaises(ContractViolation):
            is_centred(Circle.at(0, -98.8, 100), t, 1, shape)

        t = TangentShapeTestCase.triple(Circle.at(4, -0.6, 0.6))
        with self.assertRaises(ContractViolation):
            is_outside_containing(Circle.at(3, 0, 5), t, 1, tangent_shape(t, 1))


class CasesTestCase(unittest.TestCase):
    @staticmethod
    def triple():
        return [Circle.at(-3, 0, 1), Circle.at(0, 0, 0.5), Circle.at(3, 0, 1)]

    def test_one_middle(self):
        t = self.triple()
        self.assertEqual(case_of(Circle.at(0, 6, 6), t, ONE_MIDDLE).case, 1)
        self.assertEqual(case_of(Circle.at(0, -6, 6), t, ONE_MIDDLE).case, 3)
        self.assertEqual(case_of(Circle.at(0, 8, 8.2), t, ONE_MIDDLE).case, 2)

        result = case_of(Circle.at(0, -8, 8.2), t, ONE_MIDDLE)
        self.assertEqual(result.case, 4)
        self.assertEqual(result.side, 2)
        self.assertEqual(result.analysis, DiskCase.ONE_MIDDLE)
        self.assertIsNone(result.witnesses[2])

    def test_orientation(self):
        t = self.triple()
        self.assertEqual(case_of(Circle.at(0, 6, 6), t, ONE_MIDDLE, orientation=-1).case, 3)
        self.assertEqual(case_of(Circle.at(0, 8, 8.2), t, ONE_MIDDLE, orientation=-1).case, 4)
        with self.assertRaises(ValueError):
            case_of(Circle.at(0, 6, 6), t, ONE_MIDDLE, orientation=0)

    def test_contained_middle(self):
        t = self.triple()
        shape = tangent_shape(t, 1)
        self.assertEqual(shape.tag, TangentShape.CONTAINED)

        result = case_of(Circle.at(0, 6, 6), t, ALL_THREE, shape)
        self.assertEqual(result.case, 2)
        self.assertEqual(result.analysis, DiskCase.CONTAINED)
        self.assertEqual(result.side, 1)
        self.assertEqual(case_of(Circle.at(0, -6, 6), t, ALL_THREE, shape).case, 5)

    def test_contract(self):
        t = self.triple()
        with self.assertRaises(ContractViolation):
            case_of(Circle.at(0, 6, 6), t, ALL_THREE)
        with self.assertRaises(ContractViolation):
            case_of(Circle.at(0, 6, 6), t, MiddleMode(MiddleMode.TWO_MIDDLES, 1), tangent_shape(t, 1))
        with self.assertRaises(ContractViolation):
            case_of(Circle.at(0, 30, 1), t, ONE_MIDDLE)

    def test_disk_case(self):
        self.assertEqual(DiskCase(3, DiskCase.CONTAINED, 1).side, 1)
        self.assertEqual(DiskCase(4, DiskCase.CONTAINED, 1).side, 2)
        with self.assertRaises(ValueError):
            DiskCase(5, DiskCase.ONE_MIDDLE, 1)


class LensesTestCase(unittest.TestCase):
    def test_lens_samples(self):
        a, b = Circle.at(0, 0, 1), Circle.at(1, 0, 1)
        pts = lens_samples(a, b, count=32)
        self.assertEqual(pts.shape[1], 2)
        for x, y in pts:
            self.assertTrue(a.contains_point(Point2(x, y)))
            self.assertTrue(b.contains_point(Point2(x, y)))

    def test_nearest_lens_point(self):
        p = nearest_lens_point(Circle.at(0, 0, 1), Circle.at(1, 0, 1), Point2(0.5, 5))
        self.assertAlmostEqual(p.x, 0.5)
        self.assertGreater(p.y, 0)
        p = nearest_lens_point(Circle.at(0, 0, 5), Circle.at(1, 0, 1), Point2(10, 0))
        self.assertEqual(p, Point2(2, 0))

    def test_segment_distances(self):
        import numpy as np

        d = segment_distances(np.array([[-1.0, 1.0]]), np.array([[1.0, 1.0], [-1.0, 1.0]]), Point2(0, 0))
        self.assertEqual(d.shape, (1, 2))
        self.assertAlmostEqual(d[0, 0], 1.0)
        self.assertAlmostEqual(d[0, 1], 2 ** 0.5)


class BipartitionTestCase(unittest.TestCase):
    def test_one_middle(self):
        t = CasesTestCase.triple()
        family = [Circle.at(0, 6, 6), Circle.at(0, 8, 8.2), Circle.at(0, -6, 6), Circle.at(0, -8, 8.2)]
        x1, x2 = build_bipartition(t, family, resolution=256)
        self.assertEqual((x1, x2), (frozenset({0, 1}), frozenset({2, 3})))
        self.assertTrue(verify_bipartition(family, x1, x2))

        x1, x2 = build_bipartition(t, family, mode=ONE_MIDDLE)
        self.assertEqual(x1, frozenset({0, 1}))

    def test_no_transversal(self):
        t = [Circle.at(0, 0, 1), Circle.at(10, 0, 1), Circle.at(5, 8, 1)]
        family = [Circle.at(5, 2.9, 6.5), Circle.at(5, 3, 9), Circle.at(5, 2.5, 7)]
        x1, x2 = build_bipartition(t, family, resolution=256)
        self.assertEqual((x1, x2), (frozenset({0, 1, 2}), frozenset()))
        self.assertTrue(verify_bipartition(family, x1, x2))

    def test_verify_bipartition(self):
        family = [Circle.at(0, 0, 1), Circle.at(5, 0, 1), Circle.at(1, 0, 1)]
        self.assertFalse(verify_bipartition(family, [0, 1], [2]))
        self.assertTrue(verify_bipartition(family, [0, 2], [1]))
        self.assertFalse(verify_bipartition(family, [0, 1, 2], []))

        with self.assertRaises(ContractViolation):
            verify_bipartition(family, [0, 2], [1, 2])
        with self.assertRaises(ContractViolation):
            verify_bipartition(family, [0], [2])
        with self.assertRaises(ContractViolation):
            verify_bipartition(family, [0, 2], [1, 3])

    def test_contract(self):
        t = CasesTestCase.triple()
        with self.assertRaises(ContractViolation):
            build_bipartition(t, [Circle.at(0, 30, 1)], resolution=64)


@st.composite
def disjoint_triples(draw):
    t = [
        Circle.at(draw(coordinate), draw(coordinate), draw(st.floats(min_value=0.3, max_value=2.0)))
        for _ in range(3)
    ]
    gaps = [t[a].center.distance(t[b].center) - t[a].radius - t[b].radius for a, b in ((0, 1), (0, 2), (1, 2))]
    assume(min(gaps) > 1e-3)
    return t


class SymmetryTestCase(unittest.TestCase):
    @given(disjoint_triples(), st.permutations([0, 1, 2]))
    @settings(max_examples=40, deadline=None)
    def test_middle_mode_equivariance(self, t, permutation):
        moved = [None] * 3
        for i, circle in enumerate(t):
            moved[permutation[i]] = circle
        mode = classify_middle_mode(t, resolution=128)
        self.assertEqual(classify_middle_mode(moved, resolution=128), mode.relabel(permutation))
        self.assertEqual(mode.relabel(permutation).middles, frozenset(permutation[m] for m in mode.middles))

    @given(disjoint_triples(), st.permutations([0, 1, 2]))
    @settings(max_examples=60, deadline=None)
    def test_tangent_shape_equivariance(self, t, permutation):
        moved = [None] * 3
        for i, circle in enumerate(t):
            moved[permutation[i]] = circle
        for i in range(3):
            try:
                shape = tangent_shape(t, i)
            except ContractViolation:
                with self.assertRaises(ContractViolation):
                    tangent_shape(moved, permutation[i])
                continue
            other = tangent_shape(moved, permutation[i])
            self.assertEqual(other.tag, shape.tag)
            self.assertEqual(set(other.others), {permutation[k] for k in shape.others})

    @given(disjoint_triples())
    @settings(max_examples=60, deadline=None)
    def test_two_intersecting_is_the_only_middle(self, t):
        profile = middle_profile(t, resolution=256).middle_profile
        for i in sorted(profile):
            if tangent_shape(t, i).tag == TangentShape.TWO_INTERSECTING:
                self.assertEqual(profile, {i})

    def test_two_intersecting_fixture(self):
        t = [Circle.at(-3, 0, 1), Circle.at(0, 0, 1.5), Circle.at(3, 0, 1)]
        self.assertEqual(tangent_shape(t, 1).tag, TangentShape.TWO_INTERSECTING)
        self.assertEqual(middle_profile(t, resolution=256).middle_profile, frozenset({1}))


class FamilyClaimsTestCase(unittest.TestCase):
    @staticmethod
    def families(mode, seeds, n_family=8):
        for seed in seeds:
            cfg = GenConfig(
                seed=seed, n_family=n_family, mode=mode, resolution=256, family_slack=0.3, containers=False
            )
            try:
                inst = gen_pseudodisk_triple(cfg)
            except GenerationError:
                continue
            yield inst.triple_circles, inst.family

    @staticmethod
    def flags(t, family, shapes):
        """Per member: (outside-containing some middle, centred with respect to some middle)."""
        out = []
        for dp in family:
            containing = [s for s in shapes if is_outside_containing(dp, t, s.index, s)]
            out.append((bool(containing), any(is_centred(dp, t, s.index, s) for s in containing)))
        return out

    def test_centred_members(self):
        seen = 0
        for mode in (MiddleMode.TWO_MIDDLES, MiddleMode.ALL_THREE):
            for t, family in self.families(mode, range(6)):
                shapes = [tangent_shape(t, m) for m in sorted(classify_middle_mode(t, resolution=256).middles)]
                if any(s.tag != TangentShape.ONE_INTERSECTING for s in shapes):
                    continue
                try:
                    flags = self.flags(t, family, shapes)
                except DegenerateInstance:
                    continue
                seen += 1
                centred = [j for j, (_, c) in enumerate(flags) if c]
                plain = [j for j, (_, c) in enumerate(flags) if not c]
                containing = [j for j, (o, c) in enumerate(flags) if o and not c]
                for a, b in itertools.combinations(centred, 2):
                    self.assertTrue(intersects(family[a], family[b]), f"centred {a} and {b} ({mode})")
                for a in containing:
                    for b in plain:
                        if a != b:
                            self.assertTrue(intersects(family[a], family[b]), f"outside-containing {a}, {b} ({mode})")
        self.assertGreater(seen, 0)

    def test_families_avoid_containers(self):
        for t, family in self.families(MiddleMode.ONE_MIDDLE, range(3), n_family=10):
            for dp in family:
                self.assertFalse(any(dp.contains_circle(c) for c in t))
                self.assertTrue(all(intersects(dp, c) for c in t))


class WitnessSegmentTestCase(unittest.TestCase):
    """Members meeting a triple through witness points on either side of the middle circle."""

    @staticmethod
    def triple():
        return [Circle.at(-5, 0, 1), Circle.at(0, 0, 0.8), Circle.at(5, 0, 1)]

    @staticmethod
    def members(t, count=150, seed=7):
        rng = np.random.default_rng(seed)
        out = []
        for _ in range(count):
            center = Point2(*rng.uniform(-30.0, 30.0, size=2))
            reach = max(center.distance(c.center) - c.radius for c in t)
            out.append(Circle(center, reach + rng.uniform(1e-3, 0.3)))
        return out

    @staticmethod
    def witness(c, dp):
        """Point of c closest to the center of dp, which lies in dp."""
        d = dp.center.distance(c.center)
        if d <= c.radius:
            return dp.center
        return c.center + (dp.center - c.center) * (c.radius / d)

    def frame(self, t, dp):
        """Unit vector pointing from the middle circle to the witness line of dp, or None."""
        line = Line2.through(self.witness(t[0], dp), self.witness(t[2], dp))
        s = line.signed_distance(t[1].center)
        if abs(s) <= t[1].radius + 1e-6:
            return None
        return line.normal * (-1.0 if s > 0 else 1.0)

    def upper_line(self, t, dp, n):
        """Witness line of dp oriented along n, if its segment spans the middle circle."""
        q1, q3 = self.witness(t[0], dp), self.witness(t[2], dp)
        u = n.left_normal()
        lo, hi = sorted((u.dot(q1), u.dot(q3)))
        c = u.dot(t[1].center)
        if not (lo < c - t[1].radius - 1e-6 and c + t[1].radius + 1e-6 < hi):
            return None
        line = Line2.through(q1, q3)
        return line if line.normal.dot(n) > 0 else line.flipped()

    def test_middle_mode(self):
        self.assertEqual(classify_middle_mode(self.triple(), resolution=256), ONE_MIDDLE)

    def test_segment_above_middle(self):
        t = self.triple()
        family = self.members(t)
        qualified = 0
        for dp, dq in itertools.permutations(family, 2):
            n = self.frame(t, dp)
            if n is None:
                continue
            line = self.upper_line(t, dq, n)
            if line is None or line.signed_distance(t[1].center) >= -t[1].radius - 1e-6:
                continue
            qualified += 1
            self.assertTrue(intersects(dp, dq), f"{dp} and {dq}")
        self.assertGreater(qualified, 0)

    def test_segment_splitting_middle(self):
        t = self.triple()
        family = self.members(t)
        qualified = 0
        for dp, dq in itertools.permutations(family, 2):
            n = self.frame(t, dp)
            if n is None:
                continue
            line = self.upper_line(t, dq, n)
            if line is None or abs(line.signed_distance(t[1].center)) >= t[1].radius - 1e-6:
                continue
            if not contains_cap(Circle(dq.center, dq.radius - 1e-6), t[1], line):
                continue
            qualified += 1
            self.assertTrue(intersects(dp, dq), f"{dp} and {dq}")
        self.assertGreater(qualified, 0)
