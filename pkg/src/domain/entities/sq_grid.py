""" This module has definition of the SqGrid entity
"""
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from src.domain.value_objects import Zone

PEAK_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class SqGrid:
    """Definition of the SqGrid entity, S(q) on a raster
    :param zone: square or hexagonal reciprocal frame
    :param shear: shear of the real-space positions used
    :param k_axis: raster coordinates along each reciprocal basis vector
    :param basis: 2x2 matrix mapping raster coordinates k to q = basis @ k
    :param intensities: (res, res) array, row index along k_y, column index along k_x
    :param n_sites: N_s
    :param reads: reads averaged
    """

    zone: Zone
    shear: float
    k_axis: np.ndarray
    basis: np.ndarray
    intensities: np.ndarray
    n_sites: int
    reads: int

    def __post_init__(self):
        self.intensities.flags.writeable = False

    @property
    def resolution(self) -> int:
        return int(self.k_axis.shape[0])

    @property
    def q_vectors(self) -> Tuple[np.ndarray, np.ndarray]:
        """Cartesian (qx, qy) of every pixel, each shaped like ``intensities``."""
        kx, ky = np.meshgrid(self.k_axis, self.k_axis)
        return (self.basis[0, 0] * kx + self.basis[0, 1] * ky,
                self.basis[1, 0] * kx + self.basis[1, 1] * ky)

    @property
    def max_intensity(self) -> float:
        return float(self.intensities.max())

    def nearest_index(self, qx: float, qy: float) -> Tuple[int, int]:
        grid_x, grid_y = self.q_vectors
        distance = (grid_x - qx) ** 2 + (grid_y - qy) ** 2
        return tuple(int(v) for v in np.unravel_index(np.argmin(distance), distance.shape))

    def value_at(self, qx: float, qy: float) -> float:
        return float(self.intensities[self.nearest_index(qx, qy)])

    def peak_index(self) -> Tuple[int, int]:
        """ Grid index of the maximum.
        Equivalent maxima are reported closest to q=0 and then in the positive quadrant.
        """
        peak = self.max_intensity
        tied = self.intensities >= peak - PEAK_TIE_TOLERANCE * max(peak, 1.0)
        grid_x, grid_y = self.q_vectors
        rows, cols = np.nonzero(tied)
        keys = [(round(float(np.hypot(grid_x[r, c], grid_y[r, c])), 9),
                 -float(grid_x[r, c]), -float(grid_y[r, c]), r, c)
                for r, c in zip(rows, cols)]
        best = min(keys)
        return best[3], best[4]

    def to_meta(self) -> Dict:
        return {
            "zone": str(self.zone),
            "shear": repr(float(self.shear)),
            "resolution": self.resolution,
            "k_min": repr(float(self.k_axis[0])),
            "k_step": repr(float(self.k_axis[1] - self.k_axis[0])),
            "basis": " ".join(repr(float(v)) for v in self.basis.ravel()),
            "n_sites": self.n_sites,
            "reads": self.reads,
            "max_intensity": repr(self.max_intensity),
        }

    def __repr__(self):
        return f"<SqGrid {self.zone} {self.resolution}x{self.resolution} max={self.max_intensity:g}>"
