""" Module for BuildLattice Dtos
"""

from dataclasses import dataclass, asdict, field
from typing import List

from src.domain.entities.lattice import Lattice


@dataclass
class BuildLatticeInputDto:
    """ Data Transfer Object for the lattice dump"""
    size: int
    boundary: str
    output_dir: str

    def to_dict(self):
        """ Convert data into dictionary
        """
        return asdict(self)


@dataclass
class BuildLatticeOutputDto:
    """ Data Transfer Object for the lattice dump"""
    lattice: Lattice
    output_dir: str
    files: List[str] = field(default_factory=list)
