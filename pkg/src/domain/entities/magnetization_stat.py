""" This module has definition of the MagnetizationStat entity
"""
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class MagnetizationStat:
    """Definition of the MagnetizationStat entity
    :param mean: mean of |m| over reads
    :param stderr: sample standard deviation over sqrt(reads)
    :param reads: reads averaged
    :param mean_square: mean of m^2 over reads
    """

    mean: float
    stderr: float
    reads: int
    mean_square: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.mean <= 1.0 + 1e-12:
            raise ValueError(f"Mean |m| {self.mean} is outside [0, 1]")
        if self.stderr < 0.0:
            raise ValueError("Standard error must be non-negative")

    def to_dict(self):
        return asdict(self)
