from typing import Sequence

from pancake_clique.classes.reports import TangentShape
from pancake_clique.classes.shapes import Circle, Tolerance
from pancake_clique.exceptions import ContractViolation
from pancake_clique.geometry.circles import external_tangents
from pancake_clique.pseudodisk.triple import check_triple, other_indices

__all__ = ["tangent_shape"]


def tangent_shape(t: Sequence[Circle], i: int, tol: Tolerance = None) -> TangentShape:
    """
    The tangent_shape function places triple circle ``i`` with respect to the external
    tangents of the two others:

    - ``two_intersecting`` when it meets both tangents;
    - ``one_intersecting`` when it meets exactly one, stored as ``tau``;
    - ``contained`` when it meets neither and lies in the region the tangents bound between
      the two other circles.

    :param t: three pairwise disjoint circles
    :param i: index of the classified circle
    :param tol: predicate tolerance
    :return: TangentShape
    :raise ContractViolation: when circle ``i`` lies outside the tangent region, where it
        cannot be the middle of a transversal
    """
    tol = tol or Tolerance.default()
    check_triple(t, tol)
    a, b = other_indices(i)
    da, db, di = t[a], t[b], t[i]
    tangents = external_tangents(da, db, tol)

    s = [line.signed_distance(di.center) for line in tangents]
    meets = [abs(v) <= di.radius + tol.eps for v in s]

    if all(meets):
        return TangentShape(i, TangentShape.TWO_INTERSECTING, (a, b), tangents)
    if any(meets):
        tau = tangents[0] if meets[0] else tangents[1]
        return TangentShape(i, TangentShape.ONE_INTERSECTING, (a, b), tangents, tau)

    axis = da.center - db.center
    along = (di.center - db.center).dot(axis) / axis.dot(axis)
    if all(v > di.radius for v in s) and 0 < along < 1:
        return TangentShape(i, TangentShape.CONTAINED, (a, b), tangents)
    raise ContractViolation(f"circle {i} lies outside the tangent region of circles {a} and {b}")
