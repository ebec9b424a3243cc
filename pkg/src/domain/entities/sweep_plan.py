""" This module has definition of the SweepPlan and SweepResult entities
"""
import hashlib
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np

from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.magnetization_stat import MagnetizationStat
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.sq_grid import SqGrid
from src.domain.value_objects import Boundary, OutputKind, Zone
from src.interactor.errors.error_classes import FieldValueNotPermittedException

DEFAULT_J = 0.6
DEFAULT_JPRIMES: Tuple[float, ...] = tuple(
    float(v) for v in np.round(np.arange(0.30, 1.70 + 1e-9, 0.05), 2))
DEFAULT_FIELDS: Tuple[float, ...] = (0.0, 0.1, 0.2, 0.3, 0.45, 0.6)
DEFAULT_OUTPUTS: FrozenSet[OutputKind] = frozenset(
    {OutputKind.MAGNETIZATION, OutputKind.STRUCTURE_FACTOR})


def point_seed(base_seed: int, jprime: float, h: float) -> int:
    """Stable per-point seed; depends on the point's coordinates only."""
    digest = hashlib.sha256(f"{int(base_seed)}:{jprime:.12g}:{h:.12g}".encode("utf8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


class SweepPoint(NamedTuple):
    jprime: float
    h: float
    seed: int


@dataclass(frozen=True)
class SweepPlan:
    """Definition of a (J', h) parameter grid over one lattice
    :param size: unit cells per side
    :param boundary: open-boundary termination
    :param J: coupling on J-class bonds
    :param jprimes: J' values
    :param fields: h values
    :param engine: sampler settings; its seed is the base seed of the plan
    :param outputs: observables to compute per point
    :param zone: reciprocal frame of S(q); auto switches at J' = J
    :param resolution: S(q) raster points per axis
    :param shear: shear of the positions in the hexagonal frame
    :param ground_only: restrict observables to minimum-energy reads
    :param keep_samples: keep every point's SampleSet on the result
    :param workers: points sampled concurrently
    """

    size: int = 8
    boundary: Boundary = Boundary.CORNER
    J: float = DEFAULT_J
    jprimes: Tuple[float, ...] = DEFAULT_JPRIMES
    fields: Tuple[float, ...] = DEFAULT_FIELDS
    engine: EngineSpec = field(default_factory=EngineSpec)
    outputs: FrozenSet[OutputKind] = DEFAULT_OUTPUTS
    zone: Zone = Zone.AUTO
    resolution: int = 64
    shear: float = 1.0
    ground_only: bool = False
    keep_samples: bool = False
    workers: int = 1

    def __post_init__(self):
        if len(self.jprimes) == 0:
            raise FieldValueNotPermittedException("jprime", "an empty list")
        if len(self.fields) == 0:
            raise FieldValueNotPermittedException("h", "an empty list")
        if not self.J > 0.0:
            raise FieldValueNotPermittedException("J", str(self.J))
        if self.workers < 1:
            raise FieldValueNotPermittedException("workers", str(self.workers))

    @property
    def base_seed(self) -> int:
        return self.engine.seed

    def points(self) -> List[SweepPoint]:
        """Every (J', h) pair, sorted by J' and then h."""
        pairs = sorted({(float(j), float(h)) for j in self.jprimes for h in self.fields})
        return [SweepPoint(j, h, point_seed(self.base_seed, j, h)) for j, h in pairs]

    def engine_for(self, point: SweepPoint) -> EngineSpec:
        """Engine of one point; read-level workers only when points run one at a time."""
        n_jobs = self.engine.n_jobs if self.workers == 1 else 1
        return replace(self.engine, seed=point.seed, n_jobs=n_jobs)

    def describe(self) -> Dict:
        return {
            "L": self.size,
            "boundary": str(self.boundary),
            "J": self.J,
            "jprime": list(self.jprimes),
            "h": list(self.fields),
            "engine": self.engine.describe(),
            "outputs": sorted(str(kind) for kind in self.outputs),
            "zone": str(self.zone),
            "resolution": self.resolution,
            "shear": self.shear,
            "ground_only": self.ground_only,
            "workers": self.workers,
        }


@dataclass(frozen=True, eq=False)
class PointResult:
    """Definition of the observables of one (J', h) point"""

    jprime: float
    h: float
    seed: int
    magnetization: MagnetizationStat
    staggered: MagnetizationStat
    min_energy: float
    chain_break_rate: Optional[float] = None
    structure_factor: Optional[SqGrid] = None
    samples: Optional[SampleSet] = None

    @property
    def key(self) -> Tuple[float, float]:
        return self.jprime, self.h


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Definition of the outcome of a sweep, one entry per plan point"""

    plan: SweepPlan
    points: Dict[Tuple[float, float], PointResult]
    provenance: Dict = field(default_factory=dict)

    def __post_init__(self):
        expected = [(p.jprime, p.h) for p in self.plan.points()]
        missing = [key for key in expected if key not in self.points]
        if missing:
            raise ValueError(f"Sweep result misses points {missing}")

    def rows(self) -> List[PointResult]:
        return [self.points[key] for key in sorted(self.points)]

    def curve(self, jprime: float) -> List[PointResult]:
        """Points at one J', ordered by h."""
        return [row for row in self.rows() if row.jprime == jprime]

    def __len__(self):
        return len(self.points)
