__all__ = [
    "PancakeCliqueError",
    "ContractViolation",
    "GeometryError",
    "DegenerateInstance",
    "InvalidOrdering",
    "OracleCapExceeded",
    "GenerationError",
    "InstanceFormatError",
]


class PancakeCliqueError(Exception):
    """Root of the library exceptions."""


class ContractViolation(PancakeCliqueError, ValueError):
    """A documented precondition does not hold for the given input."""


class GeometryError(PancakeCliqueError, ValueError):
    """A geometric construction does not exist for the given objects."""


class DegenerateInstance(PancakeCliqueError):
    """A classification quantity lies within tolerance of a decision boundary."""


class InvalidOrdering(PancakeCliqueError):
    """
    An edge ordering failed the cobipartite neighbourhood test.

    :param position: 1-based position of the offending edge
    :param certificate: odd cycle in the complement of the neighbourhood
    """

    def __init__(self, position: int, certificate: object):
        self.position = position
        self.certificate = certificate
        super().__init__(
            f"neighbourhood of position {position} is not cobipartite: {certificate}"
        )


class OracleCapExceeded(PancakeCliqueError):
    """The brute-force oracle was asked for a graph above its vertex cap."""


class GenerationError(PancakeCliqueError):
    """The generator could not place an object within its rejection budget."""


class InstanceFormatError(PancakeCliqueError, ValueError):
    """Malformed instance, result or report document."""
