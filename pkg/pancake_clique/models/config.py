from dataclasses import dataclass
from typing import Optional, Tuple

from pancake_clique.classes.reports import MiddleMode
from pancake_clique.classes.shapes import Tolerance
from pancake_clique.exceptions import ContractViolation

__all__ = ["GenConfig"]


@dataclass(frozen=True)
class GenConfig:
    """
    Generator settings.

    :param seed: seed of the PCG64 stream
    :param box: (width, height) of the placement rectangle; pancake spines and disk centers
        have ``x`` in ``[0, width]``, disk centers have ``y`` in ``[-height/2, height/2]``
    :param margin: smallest accepted distance of a guarded quantity to its threshold
    :param n_disks: unit disks of a pi2 instance
    :param n_pancakes: 2-pancakes of a pi2 instance
    :param n_family: family circles of a pseudodisk instance
    :param max_rejections: redraws allowed per object before giving up
    :param pancake_mean_length: mean of the exponential spine lengths
    :param mode: middle mode the pseudodisk triple should have, or None
    :param resolution: swept directions when checking the triple mode
    :param family_slack: upper bound of the radius slack of family circles; None draws it up to
        the mean triple radius and also switches family centers to the bounding box of the triple
    :param containers: whether family circles may contain a circle of the triple
    """

    seed: int = 0
    box: Tuple[float, float] = (20.0, 6.0)
    margin: float = 1e-6
    n_disks: int = 0
    n_pancakes: int = 0
    n_family: int = 0
    max_rejections: int = 10000
    pancake_mean_length: float = 2.0
    mode: Optional[str] = None
    resolution: int = 1024
    family_slack: Optional[float] = None
    containers: bool = True

    def __post_init__(self):
        object.__setattr__(self, "box", tuple(float(v) for v in self.box))
        eps = Tolerance.default().eps
        if not self.margin > 10 * eps:
            raise ContractViolation(f"margin must exceed 10 * eps = {10 * eps}, got {self.margin}")
        for name in ("n_disks", "n_pancakes", "n_family", "max_rejections"):
            if getattr(self, name) < 0:
                raise ContractViolation(f"{name} must be non-negative, got {getattr(self, name)}")
        if len(self.box) != 2 or min(self.box) <= 0:
            raise ContractViolation(f"box must hold a positive width and height, got {self.box}")
        if self.pancake_mean_length <= 0:
            raise ContractViolation(f"pancake_mean_length must be positive, got {self.pancake_mean_length}")
        if self.mode is not None and self.mode not in MiddleMode.TAGS:
            raise ContractViolation(f"unknown mode {self.mode!r}, expected one of {MiddleMode.TAGS}")
        if self.resolution < 3:
            raise ContractViolation(f"resolution must be at least 3, got {self.resolution}")
        if self.family_slack is not None and not self.family_slack > 0:
            raise ContractViolation(f"family_slack must be positive, got {self.family_slack}")
