""" Reductions of sample sets to magnetization, correlations and S(q)
"""
from typing import Dict

import numpy as np

from src.domain.entities.lattice import Lattice, kagome_positions, shear_matrix
from src.domain.entities.magnetization_stat import MagnetizationStat
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.sq_grid import SqGrid
from src.domain.value_objects import Zone
from src.interactor.errors.error_classes import (
    EmptySampleSetException,
    ResolutionException,
    SiteIndexException,
    ZoneException,
)

MIN_RESOLUTION = 8
DEFAULT_RESOLUTION = 64
READ_CHUNK = 256


def _reads(samples: SampleSet, ground_only: bool) -> np.ndarray:
    if samples is None or samples.reads == 0:
        raise EmptySampleSetException()
    configs = samples.configs[samples.ground_mask()] if ground_only else samples.configs
    return configs.astype(np.float64)


def _stat(values: np.ndarray) -> MagnetizationStat:
    reads = values.shape[0]
    stderr = float(np.std(values, ddof=1) / np.sqrt(reads)) if reads > 1 else 0.0
    return MagnetizationStat(mean=float(np.mean(values)), stderr=stderr, reads=reads,
                             mean_square=float(np.mean(values ** 2)))


def magnetization(samples: SampleSet, ground_only: bool = False) -> MagnetizationStat:
    """ <|m|> over reads, m = (1/N) sum_i s_i.
    :param samples: SampleSet
    :param ground_only: keep only reads at the minimum sampled energy
    :return: MagnetizationStat
    """
    configs = _reads(samples, ground_only)
    return _stat(np.abs(configs.mean(axis=1)))


def staggered_magnetization(samples: SampleSet, ground_only: bool = False) -> MagnetizationStat:
    """<|m_s|> with Corner spins counted +1 and Edge spins -1."""
    lattice = _lattice(samples)
    configs = _reads(samples, ground_only)
    signs = np.where(lattice.corner_mask, 1.0, -1.0)
    return _stat(np.abs(configs @ signs) / lattice.n_sites)


def correlation(samples: SampleSet, i: int, j: int) -> float:
    """Mean of s_i s_j over reads."""
    configs = _reads(samples, False)
    for site in (i, j):
        if not 0 <= site < samples.n_spins:
            raise SiteIndexException(site, samples.n_spins)
    return float(np.mean(configs[:, i] * configs[:, j]))


def correlation_matrix(samples: SampleSet, ground_only: bool = False) -> np.ndarray:
    configs = _reads(samples, ground_only)
    return configs.T @ configs / configs.shape[0]


def k_axis(resolution: int) -> np.ndarray:
    """Periodic raster over [-2pi, 2pi): contains 0, +-pi and -2pi for resolutions divisible by 4."""
    steps = 2 * np.arange(resolution) - resolution
    return 2.0 * np.pi * steps / resolution


def reciprocal_basis(zone: Zone, shear: float = 1.0) -> np.ndarray:
    """Matrix B with q = B k; the hexagonal frame is the reciprocal of the sheared positions."""
    if zone is Zone.SQUARE:
        return np.eye(2)
    if zone is Zone.HEXAGONAL:
        return np.linalg.inv(shear_matrix(shear)).T
    raise ZoneException(str(zone))


def zone_positions(lattice: Lattice, zone: Zone, shear: float = 1.0) -> np.ndarray:
    if zone is Zone.SQUARE:
        return np.asarray(lattice.positions_square)
    if zone is Zone.HEXAGONAL:
        return kagome_positions(lattice, shear)
    raise ZoneException(str(zone))


def _lattice(samples: SampleSet) -> Lattice:
    if samples.model.lattice is None:
        raise ValueError("Sample set has no lattice positions")
    return samples.model.lattice


def _check_grid(zone, resolution: int) -> Zone:
    if not isinstance(zone, Zone):
        try:
            zone = Zone(zone)
        except ValueError as exception:
            raise ZoneException(str(zone)) from exception
    if zone is Zone.AUTO:
        raise ZoneException(str(zone))
    if resolution < MIN_RESOLUTION:
        raise ResolutionException(resolution, MIN_RESOLUTION)
    return zone


def structure_factor(
        samples: SampleSet,
        zone: Zone = Zone.SQUARE,
        resolution: int = DEFAULT_RESOLUTION,
        shear: float = 1.0,
        ground_only: bool = False,
        method: str = "single",
) -> SqGrid:
    """ S(q) = (1/N_s) |sum_i s_i exp(-i q.r_i)|^2 averaged over reads.
    :param samples: SampleSet of a lattice-bound model
    :param zone: square (square positions) or hexagonal (sheared positions)
    :param resolution: raster points per axis, at least 8
    :param shear: shear of the positions in the hexagonal zone
    :param ground_only: keep only reads at the minimum sampled energy
    :param method: "single" for the modulus form, "double" for the O(N^2) pair sum
    :return: SqGrid
    """
    zone = _check_grid(zone, resolution)
    lattice = _lattice(samples)
    configs = _reads(samples, ground_only)
    n_sites = lattice.n_sites
    positions = zone_positions(lattice, zone, shear)
    basis = reciprocal_basis(zone, shear)
    axis = k_axis(resolution)
    kx, ky = np.meshgrid(axis, axis)
    q = np.stack([kx.ravel(), ky.ravel()])
    q = basis @ q

    if method == "single":
        phases = np.exp(-1j * (positions @ q))
        total = np.zeros(q.shape[1])
        for start in range(0, configs.shape[0], READ_CHUNK):
            amplitude = configs[start:start + READ_CHUNK] @ phases
            total += np.sum(amplitude.real ** 2 + amplitude.imag ** 2, axis=0)
        values = total / (configs.shape[0] * n_sites)
    elif method == "double":
        correlations = correlation_matrix(samples, ground_only)
        dx = positions[:, None, 0] - positions[None, :, 0]
        dy = positions[:, None, 1] - positions[None, :, 1]
        values = np.empty(q.shape[1])
        for index in range(q.shape[1]):
            values[index] = np.sum(np.cos(q[0, index] * dx + q[1, index] * dy) * correlations)
        values /= n_sites
    else:
        raise ValueError(f"Unknown structure factor method '{method}'")

    return SqGrid(
        zone=zone,
        shear=float(shear),
        k_axis=axis,
        basis=basis,
        intensities=np.maximum(values, 0.0).reshape(resolution, resolution),
        n_sites=n_sites,
        reads=int(configs.shape[0]),
    )


def bragg_peak(grid: SqGrid) -> Dict[str, float]:
    """ Location and contrast of the S(q) maximum.
    :param grid: SqGrid
    :return: dict with qx, qy, intensity and ratio of the peak to the median of the rest
    """
    row, col = grid.peak_index()
    grid_x, grid_y = grid.q_vectors
    peak = float(grid.intensities[row, col])
    rest = np.delete(grid.intensities.ravel(), row * grid.resolution + col)
    median = float(np.median(rest))
    return {
        "qx": float(grid_x[row, col]),
        "qy": float(grid_y[row, col]),
        "intensity": peak,
        "contrast": peak / median if median > 0.0 else float("inf"),
    }


def zone_for(jprime: float, J: float, zone: Zone) -> Zone:
    """Resolve ``auto``: square frame below J' = J, hexagonal from it on."""
    if zone is not Zone.AUTO:
        return zone
    return Zone.SQUARE if jprime < J else Zone.HEXAGONAL
