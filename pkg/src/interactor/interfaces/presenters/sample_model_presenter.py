""" Module for the SampleModelPresenterInterface
"""

from abc import ABC, abstractmethod
from typing import Dict

from src.interactor.dtos.plan_dtos import SampleModelOutputDto


class SampleModelPresenterInterface(ABC):
    """ Shapes a single-point run
    """

    @abstractmethod
    def present(self, output_dto: SampleModelOutputDto) -> Dict:
        """ Present the output dto
        """
