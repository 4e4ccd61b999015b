from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Tuple

from pancake_clique.classes.shapes import Line2, Point2

__all__ = [
    "SupportInterval",
    "TransversalSample",
    "TransversalReport",
    "MiddleMode",
    "TangentShape",
    "DiskCase",
]


@dataclass(frozen=True)
class SupportInterval:
    """
    Offsets ``t`` for which the line ``{p . n(theta) = t}`` meets a convex set,
    with ``n(theta) = (-sin theta, cos theta)``.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"SupportInterval requires lo <= hi, got [{self.lo}, {self.hi}]")

    def __contains__(self, t: float) -> bool:
        return self.lo <= t <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class TransversalSample:
    """
    A sampled line transversal of a triple.

    :param theta: direction angle in [0, pi)
    :param offset: line offset along ``n(theta)``
    :param middle: index (0, 1 or 2) of the set met in second position
    """

    theta: float
    offset: float
    middle: int

    @property
    def line(self) -> Line2:
        return Line2.from_angle(self.theta, self.offset)


@dataclass(frozen=True)
class TransversalReport:
    """
    :param samples: transversals sorted by angle then offset
    :param middle_profile: indices occurring as middle in ``samples``
    :param resolution: number of swept angles
    """

    samples: Tuple[TransversalSample, ...]
    middle_profile: FrozenSet[int]
    resolution: int

    @classmethod
    def from_samples(cls, samples: Iterable[TransversalSample], resolution: int) -> "TransversalReport":
        ordered = tuple(sorted(samples, key=lambda s: (s.theta, s.offset)))
        return cls(ordered, frozenset(s.middle for s in ordered), resolution)

    def samples_with_middle(self, i: int) -> Tuple[TransversalSample, ...]:
        return tuple(s for s in self.samples if s.middle == i)


@dataclass(frozen=True)
class MiddleMode:
    """
    How many triple members are the middle of some line transversal.

    ``index`` is the middle disk for ``one_middle`` and the excluded disk for ``two_middles``.
    """

    NO_TRANSVERSAL = "no_transversal"
    ONE_MIDDLE = "one_middle"
    TWO_MIDDLES = "two_middles"
    ALL_THREE = "all_three"
    TAGS = (NO_TRANSVERSAL, ONE_MIDDLE, TWO_MIDDLES, ALL_THREE)

    tag: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(f"Unknown middle mode {self.tag!r}")
        needs_index = self.tag in (self.ONE_MIDDLE, self.TWO_MIDDLES)
        if needs_index != (self.index is not None):
            raise ValueError(f"Middle mode {self.tag!r} index mismatch: {self.index}")

    @classmethod
    def from_profile(cls, profile: Iterable[int]) -> "MiddleMode":
        p = set(profile)
        if not p:
            return cls(cls.NO_TRANSVERSAL)
        if len(p) == 1:
            return cls(cls.ONE_MIDDLE, next(iter(p)))
        if len(p) == 2:
            return cls(cls.TWO_MIDDLES, ({0, 1, 2} - p).pop())
        return cls(cls.ALL_THREE)

    @property
    def middles(self) -> FrozenSet[int]:
        if self.tag == self.NO_TRANSVERSAL:
            return frozenset()
        if self.tag == self.ONE_MIDDLE:
            return frozenset({self.index})
        if self.tag == self.TWO_MIDDLES:
            return frozenset({0, 1, 2} - {self.index})
        return frozenset({0, 1, 2})

    def relabel(self, permutation) -> "MiddleMode":
        """Mode of the triple whose member ``i`` is renamed ``permutation[i]``."""
        if self.index is None:
            return self
        return MiddleMode(self.tag, permutation[self.index])


@dataclass(frozen=True)
class TangentShape:
    """
    Position of triple member ``index`` relative to the external tangents of the other two.

    :param index: the classified member
    :param tag: ``contained``, ``one_intersecting`` or ``two_intersecting``
    :param others: indices of the two other members, increasing
    :param tangents: external tangents of the other two, oriented with both on the positive side
    :param tau: for ``one_intersecting``, the tangent meeting the member; ``A_i`` is the part
        of the member on the positive side of ``tau``
    """

    CONTAINED = "contained"
    ONE_INTERSECTING = "one_intersecting"
    TWO_INTERSECTING = "two_intersecting"
    TAGS = (CONTAINED, ONE_INTERSECTING, TWO_INTERSECTING)

    index: int
    tag: str
    others: Tuple[int, int]
    tangents: Tuple[Line2, Line2]
    tau: Optional[Line2] = None

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(f"Unknown tangent shape {self.tag!r}")
        if (self.tag == self.ONE_INTERSECTING) != (self.tau is not None):
            raise ValueError("tau is defined exactly for one_intersecting shapes")


@dataclass(frozen=True)
class DiskCase:
    """
    Case of a family member under one of the two case analyses.

    :param case: 1..4 for the one-middle analysis, 1..6 for the contained analysis
    :param analysis: ``one_middle`` or ``contained``
    :param middle: triple index playing the middle role
    :param witnesses: points ``p'_a``, ``p'_b`` in the member's intersections with the two
        other triple disks, and ``p'_middle`` when the analysis needed one
    """

    ONE_MIDDLE = "one_middle"
    CONTAINED = "contained"

    case: int
    analysis: str
    middle: int
    witnesses: Tuple[Point2, Point2, Optional[Point2]] = field(default=None)

    def __post_init__(self):
        upper = 4 if self.analysis == self.ONE_MIDDLE else 6
        if self.analysis not in (self.ONE_MIDDLE, self.CONTAINED) or not 1 <= self.case <= upper:
            raise ValueError(f"Invalid case {self.case} for analysis {self.analysis!r}")

    @property
    def side(self) -> int:
        """1 for the first clique of the analysis, 2 for the second."""
        half = 2 if self.analysis == self.ONE_MIDDLE else 3
        return 1 if self.case <= half else 2
