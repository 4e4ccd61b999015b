import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from pancake_clique.classes.reports import TransversalReport, TransversalSample
from pancake_clique.classes.shapes import Line2, Tolerance
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.predicates import intersects
from pancake_clique.transversal.support import ConvexSet, chord_interval, support_bounds

__all__ = ["transversal_exists", "middle_of_line", "middle_profile", "overlap"]

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 4096
DEFAULT_REFINE_TOL = 1e-10


def __check_triple(triple: Sequence[ConvexSet], tol: Tolerance):
    if len(triple) != 3:
        raise ContractViolation(f"a triple has three sets, got {len(triple)}")
    for a in range(3):
        for b in range(a + 1, 3):
            if intersects(triple[a], triple[b], tol):
                raise ContractViolation(f"triple sets {a} and {b} intersect")


def overlap(triple: Sequence[ConvexSet], thetas: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Overlap of the three support intervals at each angle.

    :param triple: three convex sets
    :param thetas: angles
    :return: ``(g, low, high)`` with ``low = max(lo)``, ``high = min(hi)`` and ``g = high - low``;
        lines of direction theta meet all three sets iff ``g >= 0``
    """
    lo, hi = support_bounds(triple, thetas)
    low, high = lo.max(axis=0), hi.min(axis=0)
    return high - low, low, high


def __refined_maxima(triple: Sequence[ConvexSet], thetas: np.ndarray, g: np.ndarray, refine_tol: float) -> List[float]:
    """
    Angles where the overlap reaches a non-negative local maximum between grid points.
    The overlap has period pi, so the grid wraps around.
    """
    n = g.size
    step = math.pi / n
    found = []
    for i in range(n):
        if g[i] < g[i - 1] or g[i] < g[(i + 1) % n]:
            continue
        res = minimize_scalar(
            lambda t: -overlap(triple, np.array([t]))[0][0],
            bounds=(thetas[i] - step, thetas[i] + step),
            method="bounded",
            options={"xatol": refine_tol},
        )
        logger.debug("refined local maximum near %.6f: overlap %.3e", thetas[i], -res.fun)
        if -res.fun >= 0:
            found.append(float(res.x) % math.pi)
    return sorted(set(found))


def middle_of_line(line: Line2, triple: Sequence[ConvexSet], tol: Tolerance = None) -> int:
    """
    The middle_of_line function returns the index of the set met in second position by a
    line transversal of three pairwise disjoint convex sets.

    :param line: a line meeting the three sets
    :param triple: three convex sets
    :param tol: predicate tolerance
    :return: index 0, 1 or 2
    :raise GeometryError: when the line misses a set
    """
    tol = tol or Tolerance.default()
    chords = sorted((chord_interval(line, s, tol), k) for k, s in enumerate(triple))
    for (first, _), (second, _) in zip(chords, chords[1:]):
        if first[1] > second[0] + tol.eps:
            raise ContractViolation(f"chords {first} and {second} overlap: the sets are not disjoint")
    return chords[1][1]


def __sample(triple, theta: float, offset: float, tol: Tolerance) -> TransversalSample:
    return TransversalSample(theta, offset, middle_of_line(Line2.from_angle(theta, offset), triple, tol))


def transversal_exists(
    triple: Sequence[ConvexSet],
    resolution: int = DEFAULT_RESOLUTION,
    refine_tol: float = DEFAULT_REFINE_TOL,
    tol: Tolerance = None,
) -> Optional[TransversalSample]:
    """
    The transversal_exists function looks for a line meeting three pairwise disjoint convex
    sets by sweeping ``resolution`` directions in ``[0, pi)``. When no grid direction works,
    each local maximum of the overlap is refined to ``refine_tol`` before giving up.

    :param triple: three pairwise disjoint convex sets
    :param resolution: number of swept directions
    :param refine_tol: angular tolerance of the refinement
    :param tol: predicate tolerance
    :return: the first transversal found, or None
    """
    tol = tol or Tolerance.default()
    __check_triple(triple, tol)
    thetas = np.linspace(0.0, math.pi, resolution, endpoint=False)
    g, low, high = overlap(triple, thetas)

    hits = np.flatnonzero(g >= 0)
    if hits.size:
        i = int(hits[0])
        return __sample(triple, float(thetas[i]), float((low[i] + high[i]) / 2), tol)

    for theta in __refined_maxima(triple, thetas, g, refine_tol):
        _, lo1, hi1 = overlap(triple, np.array([theta]))
        return __sample(triple, theta, float((lo1[0] + hi1[0]) / 2), tol)
    return None


def middle_profile(
    triple: Sequence[ConvexSet],
    resolution: int = DEFAULT_RESOLUTION,
    refine_tol: float = DEFAULT_REFINE_TOL,
    tol: Tolerance = None,
) -> TransversalReport:
    """
    The middle_profile function samples line transversals of a disjoint triple in every
    swept direction (three offsets per direction: both ends of the overlap, moved inward,
    and its midpoint) and collects the sets occurring in the middle.

    :param triple: three pairwise disjoint convex sets
    :param resolution: number of swept directions
    :param refine_tol: angular tolerance of the refinement used when no grid direction works
    :param tol: predicate tolerance
    :return: TransversalReport
    """
    tol = tol or Tolerance.default()
    __check_triple(triple, tol)
    thetas = np.linspace(0.0, math.pi, resolution, endpoint=False)
    g, low, high = overlap(triple, thetas)

    samples = []
    for i in np.flatnonzero(g >= 0):
        width = float(g[i])
        delta = min(width / 4, 1e-7)
        offsets = {float(low[i]) + delta, float(low[i] + high[i]) / 2, float(high[i]) - delta}
        for t in sorted(offsets):
            samples.append(__sample(triple, float(thetas[i]), t, tol))

    if not samples:
        for theta in __refined_maxima(triple, thetas, g, refine_tol):
            _, lo1, hi1 = overlap(triple, np.array([theta]))
            samples.append(__sample(triple, theta, float((lo1[0] + hi1[0]) / 2), tol))

    report = TransversalReport.from_samples(samples, resolution)
    logger.debug("middle profile %s from %d samples", sorted(report.middle_profile), len(samples))
    return report
