""" Module for the StructureFactorPresenterInterface
"""

from abc import ABC, abstractmethod
from typing import Dict

from src.interactor.dtos.structure_factor_dtos import StructureFactorOutputDto


class StructureFactorPresenterInterface(ABC):
    """ Shapes S(q) of a samples dump
    """

    @abstractmethod
    def present(self, output_dto: StructureFactorOutputDto) -> Dict:
        """ Present the output dto
        """
