""" This module has definition of the Lattice entity
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.domain.value_objects import BondClass, Boundary, SiteRole
from src.interactor.errors.error_classes import LatticeSizeException, ShearOutOfRangeException

KAGOME_HEIGHT = np.sqrt(3.0) / 2.0


@dataclass(frozen=True, eq=False)
class Lattice:
    """Definition of the Lattice entity
    :param size: unit cells per side (L)
    :param boundary: open-boundary termination
    :param grid: integer grid coordinates, one row per site
    :param roles: role of every site
    :param bonds: site index pairs (i < j), one row per bond
    :param bond_classes: class of every bond
    """

    size: int
    boundary: Boundary
    grid: np.ndarray
    roles: Tuple[SiteRole, ...]
    bonds: np.ndarray
    bond_classes: Tuple[BondClass, ...]

    def __post_init__(self):
        self.grid.flags.writeable = False
        self.bonds.flags.writeable = False

    @property
    def n_sites(self) -> int:
        return int(self.grid.shape[0])

    @property
    def n_bonds(self) -> int:
        return int(self.bonds.shape[0])

    @property
    def sites(self) -> List[Tuple[Tuple[int, int], SiteRole]]:
        return [((int(x), int(y)), role) for (x, y), role in zip(self.grid, self.roles)]

    @property
    def bond_list(self) -> List[Tuple[int, int, BondClass]]:
        return [(int(i), int(j), cls) for (i, j), cls in zip(self.bonds, self.bond_classes)]

    @cached_property
    def positions_square(self) -> np.ndarray:
        positions = self.grid.astype(np.float64)
        positions.flags.writeable = False
        return positions

    @cached_property
    def positions_kagome(self) -> np.ndarray:
        positions = kagome_positions(self, 1.0)
        positions.flags.writeable = False
        return positions

    @cached_property
    def index(self) -> Dict[Tuple[int, int], int]:
        """Site index keyed by grid coordinate."""
        return {(int(x), int(y)): i for i, (x, y) in enumerate(self.grid)}

    @cached_property
    def corner_mask(self) -> np.ndarray:
        return np.array([role is SiteRole.CORNER for role in self.roles], dtype=bool)

    @cached_property
    def jprime_mask(self) -> np.ndarray:
        return np.array([cls is BondClass.JPRIME for cls in self.bond_classes], dtype=bool)

    def role_counts(self) -> Dict[SiteRole, int]:
        counts = {role: 0 for role in SiteRole}
        for role in self.roles:
            counts[role] += 1
        return counts

    def neel_config(self) -> np.ndarray:
        """Ideal Lieb Néel state: Corners +1, Edges -1."""
        return np.where(self.corner_mask, 1, -1).astype(np.int8)

    def neel_magnetization(self) -> float:
        """|m| of the ideal Néel state, from role counts."""
        corners = int(self.corner_mask.sum())
        return abs(corners - (self.n_sites - corners)) / self.n_sites

    def degree(self, bond_class: BondClass) -> np.ndarray:
        """Per-site number of bonds of the given class."""
        mask = np.array([cls is bond_class for cls in self.bond_classes], dtype=bool)
        return np.bincount(self.bonds[mask].ravel(), minlength=self.n_sites)

    def subset(self, indices: Sequence[int]) -> "Lattice":
        """Induced sub-lattice on ``indices``, renumbered in the given order."""
        keep = [int(i) for i in indices]
        remap = {old: new for new, old in enumerate(keep)}
        bonds, classes = [], []
        for (i, j), cls in zip(self.bonds, self.bond_classes):
            if int(i) in remap and int(j) in remap:
                a, b = remap[int(i)], remap[int(j)]
                bonds.append((min(a, b), max(a, b)))
                classes.append(cls)
        return Lattice(
            size=self.size,
            boundary=self.boundary,
            grid=self.grid[keep].copy(),
            roles=tuple(self.roles[i] for i in keep),
            bonds=np.array(bonds, dtype=np.int64).reshape(-1, 2),
            bond_classes=tuple(classes),
        )

    def replicate(self, copies: int) -> "Lattice":
        """Disjoint union of ``copies`` translated copies, with no bonds between them."""
        offset = 2 * self.size + 2
        grids, bonds = [], []
        for copy in range(copies):
            grids.append(self.grid + np.array([copy * offset, 0]))
            bonds.append(self.bonds + copy * self.n_sites)
        return Lattice(
            size=self.size,
            boundary=self.boundary,
            grid=np.concatenate(grids),
            roles=self.roles * copies,
            bonds=np.concatenate(bonds),
            bond_classes=self.bond_classes * copies,
        )

    def to_dump_lines(self) -> List[str]:
        lines = [f"# lattice L={self.size} boundary={self.boundary} "
                 f"sites={self.n_sites} bonds={self.n_bonds}"]
        lines += [f"{i} {x} {y} {role}" for i, ((x, y), role) in enumerate(self.sites)]
        lines += [f"{i} {j} {cls}" for i, j, cls in self.bond_list]
        return lines

    def __repr__(self):
        return f"<Lattice L={self.size} {self.boundary} sites={self.n_sites}>"


def _site_grid(size: int, boundary: Boundary) -> List[Tuple[int, int]]:
    extent = 2 * size
    points = []
    for y in range(extent + 1):
        for x in range(extent + 1):
            if x % 2 == 1 and y % 2 == 1:
                continue
            on_border = x in (0, extent) or y in (0, extent)
            if boundary is Boundary.EDGE and on_border and x % 2 == 0 and y % 2 == 0:
                continue
            points.append((x, y))
    return points


def build_lattice(size: int, boundary: Boundary = Boundary.CORNER) -> Lattice:
    """ Build the depleted-square lattice with open boundaries.
    :param size: unit cells per side, L >= 1
    :param boundary: CORNER keeps the full (2L+1)^2 grid minus odd-odd points
        (3L^2 + 4L + 1 sites); EDGE also drops the 4L border corners.
    :return: Lattice with row-major site order and bonds sorted by (i, j)
    """
    if isinstance(size, bool) or not isinstance(size, (int, np.integer)) or size < 1:
        raise LatticeSizeException(size)
    size = int(size)

    points = _site_grid(size, boundary)
    index = {point: i for i, point in enumerate(points)}
    roles = tuple(SiteRole.from_grid(x, y) for x, y in points)

    found: Dict[Tuple[int, int], BondClass] = {}
    for i, (x, y) in enumerate(points):
        for neighbour in ((x + 1, y), (x, y + 1)):
            j = index.get(neighbour)
            if j is not None:
                found[(min(i, j), max(i, j))] = BondClass.J
        if roles[i] is SiteRole.EDGE_H:
            # anti-diagonal partners: (2m, 2n+1) and (2m+2, 2n-1)
            for neighbour in ((x - 1, y + 1), (x + 1, y - 1)):
                j = index.get(neighbour)
                if j is not None:
                    found[(min(i, j), max(i, j))] = BondClass.JPRIME

    ordered = sorted(found)
    return Lattice(
        size=size,
        boundary=boundary,
        grid=np.array(points, dtype=np.int64),
        roles=roles,
        bonds=np.array(ordered, dtype=np.int64).reshape(-1, 2),
        bond_classes=tuple(found[pair] for pair in ordered),
    )


def shear_matrix(shear: float) -> np.ndarray:
    """Linear map from square to sheared positions; shear=1 makes the triangles equilateral."""
    if not 0.0 <= shear <= 1.0:
        raise ShearOutOfRangeException(shear)
    return np.array([[1.0, 0.5 * shear], [0.0, 1.0 + shear * (KAGOME_HEIGHT - 1.0)]])


def kagome_positions(lattice: Lattice, shear: float) -> np.ndarray:
    """ Positions after horizontal shear; interpolates linearly between the frames.
    :param lattice: Lattice
    :param shear: 0 gives the square frame, 1 the kagome frame
    :return: (N, 2) array
    """
    return lattice.positions_square @ shear_matrix(shear).T


def parse_lattice_dump(lines: Iterable[str]) -> Lattice:
    """Inverse of ``Lattice.to_dump_lines``."""
    size, boundary = 0, Boundary.CORNER
    points, roles, bonds, classes = [], [], [], []
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                key, _, value = token.partition("=")
                if key == "L":
                    size = int(value)
                elif key == "boundary":
                    boundary = Boundary(value)
            continue
        tokens = line.split()
        if len(tokens) == 4:
            points.append((int(tokens[1]), int(tokens[2])))
            roles.append(SiteRole(tokens[3]))
        elif len(tokens) == 3:
            bonds.append((int(tokens[0]), int(tokens[1])))
            classes.append(BondClass(tokens[2]))
        else:
            raise ValueError(f"Unrecognised lattice dump line: {line!r}")
    return Lattice(
        size=size,
        boundary=boundary,
        grid=np.array(points, dtype=np.int64).reshape(-1, 2),
        roles=tuple(roles),
        bonds=np.array(bonds, dtype=np.int64).reshape(-1, 2),
        bond_classes=tuple(classes),
    )


def triangle(lattice: Optional[Lattice] = None) -> Lattice:
    """The {Corner, EdgeH, EdgeV} triangle at the origin: one J' and two J bonds."""
    base = lattice if lattice is not None else build_lattice(1)
    return base.subset([base.index[(0, 0)], base.index[(1, 0)], base.index[(0, 1)]])
