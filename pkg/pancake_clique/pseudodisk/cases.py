import logging
from typing import Optional, Sequence

import numpy as np

from pancake_clique.classes.reports import DiskCase, MiddleMode, TangentShape
from pancake_clique.classes.shapes import Circle, Line2, Point2, Tolerance
from pancake_clique.exceptions import ContractViolation, DegenerateInstance
from pancake_clique.geometry.circles import contains_cap, lens_witness
from pancake_clique.geometry.predicates import intersects, point_segment_distance
from pancake_clique.pseudodisk.lenses import LENS_SAMPLES, lens_samples, nearest_lens_point, segment_distances
from pancake_clique.pseudodisk.triple import other_indices

__all__ = ["case_of"]

logger = logging.getLogger(__name__)


def __split_case(dp: Circle, dm: Circle, line: Line2, upper: int, lower: int, tol: Tolerance) -> int:
    """
    The segment crosses the middle circle: dp holds one of the two parts.
    The upper part lies on the positive side of ``line``.
    """
    if contains_cap(dp, dm, line, tol):
        return upper
    if contains_cap(dp, dm, line.flipped(), tol):
        return lower
    raise DegenerateInstance("family circle holds neither part of the middle circle")


def __oriented(p: Point2, q: Point2, orientation: int) -> Line2:
    if p == q:
        raise DegenerateInstance(f"witness points coincide at {p}")
    line = Line2.through(p, q)
    return line if orientation > 0 else line.flipped()


def __one_middle_case(dp, t, m, orientation, tol) -> DiskCase:
    a, b = other_indices(m)
    dm = t[m]
    pa, pb = lens_witness(dp, t[a], tol), lens_witness(dp, t[b], tol)
    line = __oriented(pa, pb, orientation)

    gap = point_segment_distance(dm.center, pa, pb) - dm.radius
    if abs(gap) <= tol.eps:
        raise DegenerateInstance(f"segment between witnesses is tangent to middle circle {m}")
    if gap > 0:
        # segment above the middle circle when the circle is on its negative side
        case = 1 if line.signed_distance(dm.center) < 0 else 3
    else:
        case = __split_case(dp, dm, line, 2, 4, tol)
    return DiskCase(case, DiskCase.ONE_MIDDLE, m, (pa, pb, None))


def __middle_witness(dp, t, m, pa, pb, samples, tol) -> Optional[Point2]:
    """
    A point of ``dp`` and the middle circle seeing each witness without crossing the
    circle on the other side, if the samples hold one.
    """
    a, b = other_indices(m)
    pts = lens_samples(dp, t[m], samples, tol)
    pa_arr, pb_arr = np.array([pa.as_tuple()]), np.array([pb.as_tuple()])
    clear_b = segment_distances(pa_arr, pts, t[b].center)[0] > t[b].radius + tol.eps
    clear_a = segment_distances(pb_arr, pts, t[a].center)[0] > t[a].radius + tol.eps
    good = np.flatnonzero(clear_a & clear_b)
    if good.size == 0:
        return None
    return Point2(*pts[good[0]])


def __contained_case(dp, t, m, orientation, samples, tol) -> DiskCase:
    a, b = other_indices(m)
    dm = t[m]

    # a crossing segment between the two lenses, when one exists
    qa, qb = lens_samples(dp, t[a], samples, tol), lens_samples(dp, t[b], samples, tol)
    dist = segment_distances(qa, qb, dm.center) - dm.radius
    ia, ib = np.unravel_index(int(np.argmin(dist)), dist.shape)
    best = float(dist[ia, ib])
    if abs(best) <= tol.eps:
        raise DegenerateInstance(f"closest segment between lenses is tangent to middle circle {m}")
    if best < 0:
        pa, pb = Point2(*qa[ia]), Point2(*qb[ib])
        case = __split_case(dp, dm, __oriented(pa, pb, orientation), 2, 5, tol)
        return DiskCase(case, DiskCase.CONTAINED, m, (pa, pb, None))

    pa = nearest_lens_point(dp, t[a], dm.center, tol)
    pb = nearest_lens_point(dp, t[b], dm.center, tol)
    line = __oriented(pa, pb, orientation)
    above = line.signed_distance(dm.center) < 0
    p2 = __middle_witness(dp, t, m, pa, pb, samples, tol)
    if above:
        case = 1 if p2 is not None else 6
    else:
        case = 4 if p2 is not None else 3
    return DiskCase(case, DiskCase.CONTAINED, m, (pa, pb, p2))


def case_of(
    dp: Circle,
    t: Sequence[Circle],
    mode: MiddleMode,
    shape: TangentShape = None,
    orientation: int = 1,
    samples: int = LENS_SAMPLES,
    tol: Tolerance = None,
) -> DiskCase:
    """
    The case_of function classifies a family circle against a triple.

    With a single middle circle the segment between the lens witnesses of ``dp`` with the two
    outer circles decides: it passes above the middle circle (case 1), crosses it with ``dp``
    holding the part above (2), passes below (3) or crosses it with ``dp`` holding the part
    below (4).

    Otherwise ``shape`` must be a contained middle circle and six cases apply. A segment
    between the two outer lenses that crosses the middle circle gives 2 or 5 as above. If
    none does, the boundary crossings closest to the middle circle span the segment, and the
    case depends on its side and on a point ``p'_2`` of ``dp`` and the middle circle whose
    segments to both witnesses clear the opposite outer circle: above with such a point (1),
    below without (3), below with (4), above without (6).

    "Above" means on the left of the segment directed from the lower-index outer circle to the
    other one; ``orientation = -1`` reflects it.

    :param dp: family circle meeting the three triple circles
    :param t: the triple
    :param mode: middle mode of the triple
    :param shape: tangent shape of the middle circle, required unless ``mode`` is one_middle
    :param orientation: 1 or -1
    :param samples: boundary samples per lens
    :param tol: predicate tolerance
    :return: DiskCase
    """
    tol = tol or Tolerance.default()
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be 1 or -1, got {orientation}")
    for k, d in enumerate(t):
        if not intersects(dp, d, tol):
            raise ContractViolation(f"family circle misses triple circle {k}")

    if mode.tag == MiddleMode.ONE_MIDDLE:
        result = __one_middle_case(dp, t, mode.index, orientation, tol)
    else:
        if shape is None or shape.tag != TangentShape.CONTAINED:
            raise ContractViolation(f"{mode.tag} triples are classified against a contained middle circle")
        if shape.index not in mode.middles:
            raise ContractViolation(f"circle {shape.index} is not a middle circle of the triple")
        result = __contained_case(dp, t, shape.index, orientation, samples, tol)
    logger.debug("family circle %s: case %d (%s)", dp, result.case, result.analysis)
    return result
