""" This module has definition of the annealing schedules
"""
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from src.domain.value_objects import BetaScheduleKind
from src.interactor.errors.error_classes import ScheduleException

Profile = Tuple[Tuple[float, float], ...]

LINEAR_RAMP_UP: Profile = ((0.0, 0.0), (1.0, 1.0))
LINEAR_RAMP_DOWN: Profile = ((0.0, 1.0), (1.0, 0.0))


def _check_profile(name: str, profile: Profile) -> None:
    points = np.asarray(profile, dtype=np.float64)
    if points.ndim != 2 or points.shape[1] != 2 or points.shape[0] < 2:
        raise ScheduleException(f"{name} needs at least two (s, value) points")
    s = points[:, 0]
    if s[0] != 0.0 or s[-1] != 1.0 or np.any(np.diff(s) <= 0.0):
        raise ScheduleException(f"{name} must cover s from 0 to 1 in increasing order")
    if np.any(points[:, 1] < 0.0):
        raise ScheduleException(f"{name} values must be non-negative")


@dataclass(frozen=True)
class AnnealSchedule:
    """Definition of the quantum annealing schedule
    :param gamma0: transverse scale, Gamma(s) = gamma0 * transverse_profile(s)
    :param classical_profile: piecewise-linear table of the classical scale J(s)
    :param transverse_profile: piecewise-linear table of the transverse shape
    :param steps: number of s increments from 0 to 1
    """

    gamma0: float = 3.0
    classical_profile: Profile = LINEAR_RAMP_UP
    transverse_profile: Profile = LINEAR_RAMP_DOWN
    steps: int = 1000

    def __post_init__(self):
        if self.gamma0 < 0.0:
            raise ScheduleException("gamma0 must be non-negative")
        if self.steps < 1:
            raise ScheduleException("steps must be at least 1")
        _check_profile("classical profile", self.classical_profile)
        _check_profile("transverse profile", self.transverse_profile)
        classical = np.asarray(self.classical_profile)[:, 1]
        transverse = np.asarray(self.transverse_profile)[:, 1]
        if classical[0] != 0.0:
            raise ScheduleException("classical scale must vanish at s=0")
        if transverse[-1] != 0.0:
            raise ScheduleException("transverse field must vanish at s=1")
        if np.any(np.diff(classical) < 0.0):
            raise ScheduleException("classical scale must be nondecreasing")
        if np.any(np.diff(transverse) > 0.0):
            raise ScheduleException("transverse field must be nonincreasing")

    @property
    def is_classical(self) -> bool:
        return self.gamma0 == 0.0

    def classical(self, s) -> np.ndarray:
        table = np.asarray(self.classical_profile)
        return np.interp(s, table[:, 0], table[:, 1])

    def transverse(self, s) -> np.ndarray:
        table = np.asarray(self.transverse_profile)
        return self.gamma0 * np.interp(s, table[:, 0], table[:, 1])

    def s_values(self) -> np.ndarray:
        if self.steps == 1:
            return np.ones(1)
        return np.linspace(0.0, 1.0, self.steps)

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class BetaSchedule:
    """Definition of the inverse-temperature ramp of simulated annealing
    :param beta_start: first sweep inverse temperature
    :param beta_end: last sweep inverse temperature
    :param kind: geometric or linear interpolation
    :param values: explicit per-sweep values, overriding the ramp when given
    """

    beta_start: float = 0.1
    beta_end: float = 10.0
    kind: BetaScheduleKind = BetaScheduleKind.GEOMETRIC
    values: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.values is not None:
            betas = np.asarray(self.values, dtype=np.float64)
            if betas.size == 0:
                raise ScheduleException("explicit beta schedule is empty")
        else:
            betas = np.array([self.beta_start, self.beta_end], dtype=np.float64)
        if np.any(~np.isfinite(betas)) or np.any(betas <= 0.0):
            raise ScheduleException("inverse temperatures must be positive")
        if np.any(np.diff(betas) < 0.0):
            raise ScheduleException("inverse temperatures must be nondecreasing")

    def betas(self, sweeps: int) -> np.ndarray:
        """Per-sweep inverse temperatures."""
        if self.values is not None:
            if len(self.values) != sweeps:
                raise ScheduleException(
                    f"explicit schedule has {len(self.values)} values for {sweeps} sweeps")
            return np.asarray(self.values, dtype=np.float64)
        if sweeps == 1:
            return np.array([self.beta_end], dtype=np.float64)
        if self.kind is BetaScheduleKind.GEOMETRIC:
            return np.geomspace(self.beta_start, self.beta_end, sweeps)
        return np.linspace(self.beta_start, self.beta_end, sweeps)

    def to_dict(self):
        data = asdict(self)
        data["kind"] = str(self.kind)
        return data
