import math
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from pancake_clique.classes.shapes import Point2, Tolerance
from pancake_clique.exceptions import ContractViolation

__all__ = ["pancake3_intersects_unit_ball", "ball_pancake3_gap"]


def __check(ball_center: Sequence[float], rho: float):
    if len(ball_center) != 3:
        raise ContractViolation(f"ball center must have three coordinates, got {ball_center}")
    if rho < 0:
        raise ContractViolation(f"pancake radius must be non-negative, got {rho}")


def pancake3_intersects_unit_ball(
    ball_center: Sequence[float], disk_center: Point2, rho: float, tol: Tolerance = None
) -> bool:
    """
    Whether the unit ball at ``ball_center`` meets the 3-pancake built on the planar disk
    ``(disk_center, rho)`` of the plane ``z = 0``, i.e. that disk fattened by a unit ball.

    The test runs in the plane: the ball of radius 2 around the center cuts ``z = 0`` in a
    disk, which must meet the base disk.

    :param ball_center: (x, y, z)
    :param disk_center: center of the base disk
    :param rho: radius of the base disk
    :param tol: predicate tolerance
    :return: True if the closed bodies meet
    """
    __check(ball_center, rho)
    eps = (tol or Tolerance.default()).eps
    x, y, z = (float(v) for v in ball_center)
    if abs(z) > 2 + eps:
        return False
    section = math.sqrt(max(0.0, 4.0 - z * z))
    return Point2(x, y).distance(disk_center) <= section + rho + eps


def ball_pancake3_gap(ball_center: Sequence[float], disk_center: Point2, rho: float) -> float:
    """
    Numeric closest-point search: smallest distance between ``ball_center`` and the base
    disk, found by constrained minimisation over the disk. The bodies meet iff the value is
    at most 2.

    :param ball_center: (x, y, z)
    :param disk_center: center of the base disk
    :param rho: radius of the base disk
    :return: minimum distance
    """
    __check(ball_center, rho)
    c = np.asarray(ball_center, dtype=float)
    base = np.array([disk_center.x, disk_center.y])

    def objective(q):
        return float(np.sum((q - c[:2]) ** 2) + c[2] ** 2)

    constraints = [{"type": "ineq", "fun": lambda q: rho * rho - float(np.sum((q - base) ** 2))}]
    result = minimize(objective, base, method="SLSQP", constraints=constraints, options={"ftol": 1e-12})
    # SLSQP may stop slightly outside the feasible disk
    q = result.x
    offset = q - base
    norm = float(np.linalg.norm(offset))
    if norm > rho:
        q = base + offset * (rho / norm) if norm > 0 else base
    return math.sqrt(objective(q))
