""" This module has definition of the SampleSet entity
"""
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional

import numpy as np

from src.domain.entities.spin_model import SpinModel
from src.interactor.errors.error_classes import EmptySampleSetException

GROUND_TOLERANCE = 1e-9


class Sample(NamedTuple):
    config: np.ndarray
    energy: float
    seed: int
    chain_breaks: Optional[int]


@dataclass(frozen=True, eq=False)
class SampleSet:
    """Definition of the SampleSet entity, the read-out configurations of one model
    :param model: logical SpinModel the reads belong to
    :param configs: (R, N) array of +-1
    :param seeds: per-read stream seed
    :param chain_breaks: per-read broken-chain count when the engine ran embedded
    :param info: echo of the engine parameters
    """

    model: SpinModel
    configs: np.ndarray
    seeds: np.ndarray
    chain_breaks: Optional[np.ndarray] = None
    info: Dict = field(default_factory=dict)
    energies: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.configs.ndim != 2 or self.configs.shape[0] == 0:
            raise EmptySampleSetException()
        configs = self.model.check_config(self.configs).astype(np.int8)
        object.__setattr__(self, "configs", configs)
        object.__setattr__(self, "energies", self.model.energies(configs))
        if self.seeds.shape[0] != configs.shape[0]:
            raise ValueError("Every read needs exactly one seed")
        configs.flags.writeable = False
        self.energies.flags.writeable = False

    @property
    def reads(self) -> int:
        return int(self.configs.shape[0])

    @property
    def n_spins(self) -> int:
        return int(self.configs.shape[1])

    @property
    def min_energy(self) -> float:
        return float(self.energies.min())

    @property
    def chain_break_rate(self) -> Optional[float]:
        """Broken chains per chain, averaged over reads."""
        if self.chain_breaks is None:
            return None
        return float(np.mean(self.chain_breaks) / self.n_spins)

    def ground_mask(self, tolerance: float = GROUND_TOLERANCE) -> np.ndarray:
        return self.energies <= self.min_energy + tolerance

    def select(self, mask: np.ndarray) -> "SampleSet":
        mask = np.asarray(mask, dtype=bool)
        return SampleSet(
            model=self.model,
            configs=self.configs[mask],
            seeds=self.seeds[mask],
            chain_breaks=None if self.chain_breaks is None else self.chain_breaks[mask],
            info=dict(self.info),
        )

    def ground_states(self) -> "SampleSet":
        return self.select(self.ground_mask())

    def record(self, index: int) -> Sample:
        return Sample(
            config=self.configs[index],
            energy=float(self.energies[index]),
            seed=int(self.seeds[index]),
            chain_breaks=None if self.chain_breaks is None else int(self.chain_breaks[index]),
        )

    def __len__(self):
        return self.reads

    def __iter__(self):
        return (self.record(index) for index in range(self.reads))

    def __repr__(self):
        return f"<SampleSet reads={self.reads} N={self.n_spins} min={self.min_energy:g}>"
