import logging
import math
from typing import Callable, List, Union

import numpy as np

from pancake_clique.classes.instance import Instance
from pancake_clique.classes.reports import MiddleMode
from pancake_clique.classes.shapes import Circle, Pancake2, Point2, Tolerance, UnitDisk
from pancake_clique.exceptions import GenerationError
from pancake_clique.models.audit import family_quantities, pi2_pair_quantities
from pancake_clique.models.config import GenConfig
from pancake_clique.pseudodisk.triple import classify_middle_mode

__all__ = ["gen_pi2", "gen_pseudodisk_triple"]

logger = logging.getLogger(__name__)

# radius, in triple extents, of the disk holding family centers when a slack bound is set
FAMILY_SPREAD = 4.0


def __draw(rng: np.random.Generator, cfg: GenConfig, what: str, draw: Callable, accept: Callable):
    for attempt in range(cfg.max_rejections + 1):
        obj = draw(rng)
        if accept(obj):
            return obj
        logger.debug("rejected %s draw %d: %s", what, attempt, obj)
    raise GenerationError(f"cannot satisfy margin at this density ({what}, {cfg.max_rejections} rejections)")


def gen_pi2(cfg: GenConfig) -> Instance:
    """
    The gen_pi2 function draws a random instance of unit disks and 2-pancakes.

    Disks come first, with centers uniform in the box. Pancakes follow, with the left end
    uniform in ``[0, width]`` and an exponential length clipped to the box. A draw is rejected
    when any guarded pair quantity against an already placed object (distance against 2, disk
    center against the spine ends, corner distances against 1, spine ends against each other)
    is closer than ``cfg.margin`` to its threshold.

    :param cfg: generator settings
    :return: pi2 Instance
    :raise GenerationError: when an object exceeds ``cfg.max_rejections`` redraws
    """
    rng = np.random.default_rng(cfg.seed)
    w, h = cfg.box
    placed: List[Union[UnitDisk, Pancake2]] = []

    def disk(r):
        return UnitDisk.at(r.uniform(0.0, w), r.uniform(-h / 2.0, h / 2.0))

    def pancake(r):
        x1 = r.uniform(0.0, w)
        return Pancake2(x1, min(x1 + r.exponential(cfg.pancake_mean_length), w))

    def clean(obj):
        return all(
            abs(value) >= cfg.margin for other in placed for _, value in pi2_pair_quantities(obj, other)
        )

    for _ in range(cfg.n_disks):
        placed.append(__draw(rng, cfg, "unit disk", disk, clean))
    for _ in range(cfg.n_pancakes):
        placed.append(__draw(rng, cfg, "pancake", pancake, clean))

    logger.info("pi2 instance: %d disks, %d pancakes (seed %d)", cfg.n_disks, cfg.n_pancakes, cfg.seed)
    return Instance(objects=placed, kind="pi2")


def __template(rng: np.random.Generator, mode: str, box) -> List[Circle]:
    """Triple shapes steering each middle mode, before the random placement."""
    if mode == MiddleMode.ONE_MIDDLE:
        # collinear, the large central circle is the only middle
        return [
            Circle.at(-5.0, 0.0, 1.0),
            Circle.at(0.0, rng.uniform(-0.5, 0.5), rng.uniform(1.5, 2.5)),
            Circle.at(5.0, 0.0, 1.0),
        ]
    if mode == MiddleMode.NO_TRANSVERSAL:
        spread = 10.0 / math.sqrt(3.0)
        angles = math.pi / 2.0 + np.arange(3) * 2.0 * math.pi / 3.0
        return [Circle.at(spread * math.cos(a), spread * math.sin(a), rng.uniform(0.5, 1.5)) for a in angles]
    if mode == MiddleMode.ALL_THREE:
        # side 2, radii above sqrt(3)/2 so every circle is a middle
        spread = 2.0 / math.sqrt(3.0)
        angles = math.pi / 2.0 + np.arange(3) * 2.0 * math.pi / 3.0
        return [Circle.at(spread * math.cos(a), spread * math.sin(a), rng.uniform(0.88, 0.95)) for a in angles]
    if mode == MiddleMode.TWO_MIDDLES:
        return [Circle.at(-2.5, 0.0, 1.6), Circle.at(0.0, 1.0, 0.9), Circle.at(0.0, -1.0, 0.9)]

    w, h = box
    return [
        Circle.at(rng.uniform(0.0, w), rng.uniform(-h / 2.0, h / 2.0), rng.uniform(0.5, 1.5)) for _ in range(3)
    ]


def __place(rng: np.random.Generator, circles: List[Circle], box) -> List[Circle]:
    """Random rotation, scale and small jitter, centred in the box."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    scale = rng.uniform(0.8, 1.25)
    cos, sin = math.cos(theta), math.sin(theta)
    w, _ = box
    out = []
    for c in circles:
        x, y = c.center.x + rng.uniform(-0.05, 0.05), c.center.y + rng.uniform(-0.05, 0.05)
        out.append(Circle.at(w / 2.0 + scale * (cos * x - sin * y), scale * (sin * x + cos * y), scale * c.radius))
    return out


def __triple_clean(t: List[Circle], margin: float) -> bool:
    from pancake_clique.geometry.circles import external_tangents

    for a in range(3):
        for b in range(a + 1, 3):
            if t[a].center.distance(t[b].center) - t[a].radius - t[b].radius < margin:
                return False
    for i in range(3):
        a, b = sorted({0, 1, 2} - {i})
        for line in external_tangents(t[a], t[b]):
            if abs(abs(line.signed_distance(t[i].center)) - t[i].radius) < margin:
                return False
    return True


def gen_pseudodisk_triple(cfg: GenConfig, tol: Tolerance = None) -> Instance:
    """
    The gen_pseudodisk_triple function draws three pairwise disjoint circles and a family of
    circles meeting all three.

    With ``cfg.mode`` set, the triple starts from a shape steering that middle mode (collinear
    for one_middle, spread for no_transversal, a tight cluster for all_three) and is redrawn
    until the swept middle profile confirms the mode. Family centers are uniform in the
    bounding box of the triple, with a radius just large enough to reach all three circles
    plus a random slack. With ``cfg.family_slack`` set, centers are uniform in a disk of
    ``FAMILY_SPREAD`` triple extents around the triple and the slack is bounded by it, so
    circles come from every side and barely reach the farthest triple circle; with
    ``cfg.containers`` off, circles containing a triple circle are redrawn. Every draw must
    keep the guarded quantities of the pseudodisk classification at least ``cfg.margin`` away
    from their thresholds.

    :param cfg: generator settings
    :param tol: predicate tolerance
    :return: pseudodisk Instance with triple (0, 1, 2)
    :raise GenerationError: when the triple or a family circle exceeds ``cfg.max_rejections`` redraws
    """
    tol = tol or Tolerance.default()
    rng = np.random.default_rng(cfg.seed)

    def triple(r):
        return __place(r, __template(r, cfg.mode, cfg.box), cfg.box) if cfg.mode else __template(r, None, cfg.box)

    def triple_ok(t):
        if not __triple_clean(t, cfg.margin):
            return False
        return cfg.mode is None or classify_middle_mode(t, cfg.resolution, tol).tag == cfg.mode

    t = __draw(rng, cfg, "triple", triple, triple_ok)

    lo_x = min(c.center.x - c.radius for c in t)
    hi_x = max(c.center.x + c.radius for c in t)
    lo_y = min(c.center.y - c.radius for c in t)
    hi_y = max(c.center.y + c.radius for c in t)
    mid = Point2(float(np.mean([c.center.x for c in t])), float(np.mean([c.center.y for c in t])))
    extent = max(mid.distance(c.center) + c.radius for c in t)
    if cfg.family_slack is None:
        slack = float(np.mean([c.radius for c in t]))
    else:
        slack = cfg.family_slack

    def center_of(r):
        if cfg.family_slack is None:
            return Point2(r.uniform(lo_x, hi_x), r.uniform(lo_y, hi_y))
        rho = FAMILY_SPREAD * extent * math.sqrt(r.uniform())
        phi = r.uniform(0.0, 2 * math.pi)
        return Point2(mid.x + rho * math.cos(phi), mid.y + rho * math.sin(phi))

    def member(r):
        center = center_of(r)
        reach = max(center.distance(c.center) - c.radius for c in t)
        return Circle(center, max(reach, 0.0) + cfg.margin + r.uniform(0.0, slack))

    def member_ok(dp):
        if not cfg.containers and any(dp.contains_circle(c, tol) for c in t):
            return False
        return all(abs(value) >= cfg.margin for _, _, value in family_quantities(dp, t, tol))

    family = [__draw(rng, cfg, "family circle", member, member_ok) for _ in range(cfg.n_family)]

    logger.info(
        "pseudodisk instance: mode %s, family of %d (seed %d)", cfg.mode or "unsteered", len(family), cfg.seed
    )
    return Instance(objects=list(t) + family, kind="pseudodisk", triple=(0, 1, 2))
