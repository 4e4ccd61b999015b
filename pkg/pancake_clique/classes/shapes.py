import math
import os
from dataclasses import dataclass
from typing import Tuple, Union

__all__ = [
    "EPS_ENV_VAR",
    "Tolerance",
    "Point2",
    "Line2",
    "UnitDisk",
    "Pancake2",
    "Circle",
    "ConvexPolygon",
    "GeomObject",
]

EPS_ENV_VAR = "PANCAKE_CLIQUE_EPS"


@dataclass(frozen=True)
class Tolerance:
    """
    Predicate tolerance. Closed-set comparisons accept an error of ``eps``.

    :param eps: positive tolerance, 1e-9 by default
    """

    eps: float = 1e-9

    def __post_init__(self):
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise ValueError(f"Tolerance must be positive and finite, got {self.eps}")

    @classmethod
    def default(cls) -> "Tolerance":
        """
        Default tolerance, overridden by the ``PANCAKE_CLIQUE_EPS`` environment variable.

        :return: Tolerance instance
        """
        raw = os.environ.get(EPS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(f"{EPS_ENV_VAR} must be a float, got {raw!r}")
        return cls(value)


@dataclass(frozen=True)
class Point2:
    """A point (or vector) of the Euclidean plane."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point2 coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point2":
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def unit(self) -> "Point2":
        """
        Unit vector with the same direction.

        :return: normalised vector
        """
        n = self.norm()
        if n == 0:
            raise ValueError("Cannot normalise the null vector")
        return Point2(self.x / n, self.y / n)

    def left_normal(self) -> "Point2":
        """Vector rotated by +90 degrees."""
        return Point2(-self.y, self.x)

    def as_tuple(self) -> Tuple[float, float]:
        return self.x, self.y


@dataclass(frozen=True)
class Line2:
    """
    Line ``{p : p . normal = offset}``.

    The stored normal orients the line: points with positive signed distance lie on its
    positive side. The direction vector is the normal rotated by -90 degrees, so the positive
    side is on the left of the direction.
    """

    normal: Point2
    offset: float

    def __post_init__(self):
        object.__setattr__(self, "offset", float(self.offset))
        if not math.isfinite(self.offset):
            raise ValueError(f"Line2 offset must be finite, got {self.offset}")
        if abs(self.normal.norm() - 1.0) > 1e-9:
            raise ValueError(f"Line2 normal must be a unit vector, got {self.normal}")

    @classmethod
    def from_normal(cls, normal: Point2, offset: float) -> "Line2":
        """
        Build a line from a non-null normal, rescaling normal and offset together.

        :param normal: non-null normal vector
        :param offset: offset relative to ``normal``
        :return: Line2 instance
        """
        n = normal.norm()
        if n == 0:
            raise ValueError("Line normal must be non-null")
        return cls(Point2(normal.x / n, normal.y / n), offset / n)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line2":
        """
        Line directed from p to q; its positive side is on the left of p->q.

        :param p: first point
        :param q: second point, distinct from p
        :return: Line2 instance
        """
        if p == q:
            raise ValueError("A line needs two distinct points")
        n = (q - p).unit().left_normal()
        return cls(n, n.dot(p))

    @classmethod
    def from_angle(cls, theta: float, offset: float) -> "Line2":
        """
        Line with normal ``(-sin theta, cos theta)`` (direction ``(cos theta, sin theta)``).

        :param theta: direction angle
        :param offset: offset along the normal
        :return: Line2 instance
        """
        return cls(Point2(-math.sin(theta), math.cos(theta)), offset)

    @property
    def direction(self) -> Point2:
        return Point2(self.normal.y, -self.normal.x)

    def signed_distance(self, p: Point2) -> float:
        return self.normal.dot(p) - self.offset

    def foot(self, p: Point2) -> Point2:
        """Orthogonal projection of p on the line."""
        return p - self.normal * self.signed_distance(p)

    def parameter(self, p: Point2) -> float:
        """Coordinate of the projection of p along the line direction."""
        return self.direction.dot(p)

    def flipped(self) -> "Line2":
        return Line2(-self.normal, -self.offset)


@dataclass(frozen=True)
class Circle:
    """
    Closed disk of arbitrary positive radius.

    :param center: disk center
    :param radius: positive radius
    """

    center: Point2
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "radius", float(self.radius))
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"Circle radius must be positive, got {self.radius}")

    @classmethod
    def at(cls, x: float, y: float, radius: float) -> "Circle":
        return cls(Point2(x, y), radius)

    def contains_point(self, p: Point2, tol: Tolerance = None) -> bool:
        eps = (tol or Tolerance()).eps
        return self.center.distance(p) <= self.radius + eps

    def contains_circle(self, other: "Circle", tol: Tolerance = None) -> bool:
        eps = (tol or Tolerance()).eps
        return self.center.distance(other.center) + other.radius <= self.radius + eps

    def boundary_point(self, angle: float) -> Point2:
        return Point2(
            self.center.x + self.radius * math.cos(angle),
            self.center.y + self.radius * math.sin(angle),
        )


@dataclass(frozen=True)
class UnitDisk:
    """Closed disk of radius 1."""

    center: Point2

    @classmethod
    def at(cls, x: float, y: float) -> "UnitDisk":
        return cls(Point2(x, y))

    @property
    def radius(self) -> float:
        return 1.0

    def as_circle(self) -> Circle:
        return Circle(self.center, 1.0)


@dataclass(frozen=True)
class Pancake2:
    """
    2-pancake: the segment ``[x1, x2] x {0}`` fattened by a unit disk.

    ``x1 == x2`` is allowed and describes the unit disk centred at ``(x1, 0)``.
    """

    x1: float
    x2: float

    def __post_init__(self):
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))
        if not (math.isfinite(self.x1) and math.isfinite(self.x2)):
            raise ValueError(f"Pancake2 endpoints must be finite, got [{self.x1}, {self.x2}]")
        if self.x1 > self.x2:
            raise ValueError(f"Pancake2 requires x1 <= x2, got [{self.x1}, {self.x2}]")

    @property
    def length(self) -> float:
        return self.x2 - self.x1

    @property
    def is_degenerate(self) -> bool:
        return self.x1 == self.x2

    @property
    def spine(self) -> Tuple[Point2, Point2]:
        return Point2(self.x1, 0.0), Point2(self.x2, 0.0)

    def corners(self) -> Tuple[Point2, Point2, Point2, Point2]:
        """The four points (x1, 1), (x1, -1), (x2, 1), (x2, -1)."""
        return (
            Point2(self.x1, 1.0),
            Point2(self.x1, -1.0),
            Point2(self.x2, 1.0),
            Point2(self.x2, -1.0),
        )

    def contains(self, other: "Pancake2") -> bool:
        """
        Set containment, which for pancakes is containment of the spines.

        :param other: another pancake
        :return: True if ``other`` lies inside this pancake
        """
        return self.x1 <= other.x1 and other.x2 <= self.x2


@dataclass(frozen=True)
class ConvexPolygon:
    """
    Strictly convex polygon with counter-clockwise vertices.

    :param vertices: at least three vertices, counter-clockwise, no three collinear
    """

    vertices: Tuple[Point2, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise ValueError(f"ConvexPolygon needs at least 3 vertices, got {len(vs)}")
        n = len(vs)
        for i in range(n):
            a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
            if (b - a).cross(c - b) <= 0:
                raise ValueError(
                    "ConvexPolygon vertices must be strictly convex and counter-clockwise"
                )
        # winding number 1 rules out star-shaped self-overlapping vertex lists
        turn = 0.0
        for i in range(n):
            a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
            u, v = b - a, c - b
            turn += math.atan2(u.cross(v), u.dot(v))
        if abs(turn - 2 * math.pi) > 1e-6:
            raise ValueError("ConvexPolygon vertices must wind exactly once")

    @classmethod
    def from_coordinates(cls, coordinates) -> "ConvexPolygon":
        return cls(tuple(Point2(x, y) for x, y in coordinates))

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def contains_point(self, p: Point2, tol: Tolerance = None) -> bool:
        eps = (tol or Tolerance()).eps
        for a, b in self.edges():
            # signed distance to the edge line, positive inside
            if (b - a).cross(p - a) / a.distance(b) < -eps:
                return False
        return True


GeomObject = Union[UnitDisk, Pancake2, Circle, ConvexPolygon]
