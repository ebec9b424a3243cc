""" Module for Value Objects
"""
import enum


@enum.unique
class SiteRole(enum.Enum):
    """Enumeration for the role of a site in the depleted square grid."""

    CORNER = "corner"
    EDGE_H = "edge_h"
    EDGE_V = "edge_v"

    def __str__(self):
        return self.value

    @property
    def is_edge(self) -> bool:
        return self is not SiteRole.CORNER

    @classmethod
    def from_grid(cls, x: int, y: int) -> "SiteRole":
        """Role of the grid point (x, y); odd-odd points do not host a site."""
        if x % 2 == 0 and y % 2 == 0:
            return cls.CORNER
        if x % 2 == 1 and y % 2 == 0:
            return cls.EDGE_H
        if x % 2 == 0 and y % 2 == 1:
            return cls.EDGE_V
        raise ValueError(f"Grid point ({x}, {y}) is not a lattice site")


@enum.unique
class BondClass(enum.Enum):
    """Enumeration for bond classes."""

    J = "J"
    JPRIME = "Jprime"

    def __str__(self):
        return self.value


@enum.unique
class Boundary(enum.Enum):
    """Enumeration for open-boundary terminations."""

    CORNER = "corner"
    EDGE = "edge"

    def __str__(self):
        return self.value


@enum.unique
class Zone(enum.Enum):
    """Enumeration for reciprocal-space frames."""

    SQUARE = "square"
    HEXAGONAL = "hexagonal"
    AUTO = "auto"

    def __str__(self):
        return self.value


@enum.unique
class EngineName(enum.Enum):
    """Enumeration for sampling engines."""

    EXACT = "exact"
    SA = "sa"
    SQA = "sqa"

    def __str__(self):
        return self.value


@enum.unique
class BetaScheduleKind(enum.Enum):
    """Enumeration for inverse temperature interpolation."""

    GEOMETRIC = "geometric"
    LINEAR = "linear"

    def __str__(self):
        return self.value


@enum.unique
class OutputKind(enum.Enum):
    """Enumeration for sweep outputs."""

    MAGNETIZATION = "magnetization"
    STRUCTURE_FACTOR = "structure_factor"

    def __str__(self):
        return self.value
