from typing import Sequence

from pancake_clique.classes.reports import TangentShape
from pancake_clique.classes.shapes import Circle, Tolerance
from pancake_clique.exceptions import ContractViolation, DegenerateInstance
from pancake_clique.geometry.circles import circle_intersections, contains_cap, lens_witness
from pancake_clique.geometry.predicates import intersects

__all__ = ["is_outside_containing", "is_centred"]


def __check(dp: Circle, t: Sequence[Circle], i: int, shape: TangentShape, tol: Tolerance):
    if shape.tag != TangentShape.ONE_INTERSECTING or shape.index != i:
        raise ContractViolation(f"circle {i} must be one_intersecting, got {shape.tag} for {shape.index}")
    for k, d in enumerate(t):
        if not intersects(dp, d, tol):
            raise ContractViolation(f"family circle misses triple circle {k}")


def is_outside_containing(dp: Circle, t: Sequence[Circle], i: int, shape: TangentShape, tol: Tolerance = None) -> bool:
    """
    Whether ``dp`` covers the part of triple circle ``i`` beyond its tangent ``tau``, i.e.
    circle ``i`` minus ``A_i``.

    :param dp: family circle meeting the three triple circles
    :param t: the triple
    :param i: a one_intersecting triple index
    :param shape: tangent shape of ``i``
    :param tol: predicate tolerance
    :return: True if outside-containing
    """
    tol = tol or Tolerance.default()
    __check(dp, t, i, shape, tol)
    return contains_cap(dp, t[i], shape.tau.flipped(), tol)


def is_centred(dp: Circle, t: Sequence[Circle], i: int, shape: TangentShape, tol: Tolerance = None) -> bool:
    """
    Whether an outside-containing ``dp`` reaches the two other triple circles on different
    sides of circle ``i``.

    Circle ``i`` splits the region between ``tau`` and the chord of ``dp`` into two parts,
    separated by the line through the foot of ``c_i`` on ``tau`` and the chord midpoint.
    The lens witnesses of ``dp`` with the two other circles are compared against that line.

    :param dp: family circle meeting the three triple circles
    :param t: the triple
    :param i: a one_intersecting triple index
    :param shape: tangent shape of ``i``
    :param tol: predicate tolerance
    :return: True if centred
    :raise DegenerateInstance: when a tested point lies on the separating line
    """
    tol = tol or Tolerance.default()
    if not is_outside_containing(dp, t, i, shape, tol):
        raise ContractViolation(f"family circle is not outside-containing circle {i}")

    chi = circle_intersections(dp, t[i], tol)
    if len(chi) < 2:
        return False

    m_t = shape.tau.foot(t[i].center)
    m_k = (chi[0] + chi[1]) * 0.5
    axis = m_k - m_t
    if axis.norm() <= tol.eps:
        raise DegenerateInstance(f"chord midpoint of circle {i} lies on its tangent")

    sides = []
    for k in shape.others:
        s = axis.cross(lens_witness(dp, t[k], tol) - m_t) / axis.norm()
        if abs(s) <= tol.eps:
            raise DegenerateInstance(f"witness with circle {k} lies on the axis of circle {i}")
        sides.append(s > 0)
    return sides[0] != sides[1]
