""" Module for the Dtos of the sampling operations (sample and sweep)
"""

from dataclasses import dataclass, field
from typing import Dict, List

from src.domain.entities.sweep_plan import PointResult, SweepPlan, SweepResult


@dataclass
class SampleModelInputDto:
    """ Data Transfer Object for a single-point run"""
    plan: SweepPlan
    output_dir: str

    def to_dict(self) -> Dict:
        """ Convert data into dictionary
        """
        return {
            "jprime": list(self.plan.jprimes),
            "h": list(self.plan.fields),
            "output_dir": self.output_dir,
        }


@dataclass
class SampleModelOutputDto:
    """ Data Transfer Object for a single-point run"""
    point: PointResult
    neel_magnetization: float
    output_dir: str
    files: List[str] = field(default_factory=list)


@dataclass
class RunSweepInputDto:
    """ Data Transfer Object for a parameter sweep"""
    plan: SweepPlan
    output_dir: str
    dump_samples: bool = False

    def to_dict(self) -> Dict:
        """ Convert data into dictionary
        """
        return {
            "jprime": list(self.plan.jprimes),
            "h": list(self.plan.fields),
            "output_dir": self.output_dir,
            "dump_samples": self.dump_samples,
        }


@dataclass
class RunSweepOutputDto:
    """ Data Transfer Object for a parameter sweep"""
    result: SweepResult
    output_dir: str
    files: List[str] = field(default_factory=list)
