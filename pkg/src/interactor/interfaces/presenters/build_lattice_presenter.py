""" Module for the BuildLatticePresenterInterface
"""

from abc import ABC, abstractmethod
from typing import Dict

from src.interactor.dtos.build_lattice_dtos import BuildLatticeOutputDto


class BuildLatticePresenterInterface(ABC):
    """ Shapes the lattice dump result
    """

    @abstractmethod
    def present(self, output_dto: BuildLatticeOutputDto) -> Dict:
        """ Present the output dto
        """
