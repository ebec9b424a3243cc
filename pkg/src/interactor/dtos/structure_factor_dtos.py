""" Module for StructureFactor Dtos
"""

from dataclasses import dataclass, asdict, field
from typing import Dict, List

from src.domain.entities.sq_grid import SqGrid


@dataclass
class StructureFactorInputDto:
    """ Data Transfer Object for S(q) of a samples dump"""
    samples_path: str
    zone: str
    resolution: int
    shear: float
    ground_only: bool
    output_dir: str

    def to_dict(self):
        """ Convert data into dictionary
        """
        return asdict(self)


@dataclass
class StructureFactorOutputDto:
    """ Data Transfer Object for S(q) of a samples dump"""
    jprime: float
    h: float
    grid: SqGrid
    peak: Dict[str, float]
    output_dir: str
    files: List[str] = field(default_factory=list)
