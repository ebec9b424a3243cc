""" Module for the RunSweepPresenterInterface
"""

from abc import ABC, abstractmethod
from typing import Dict

from src.interactor.dtos.plan_dtos import RunSweepOutputDto


class RunSweepPresenterInterface(ABC):
    """ Shapes a parameter sweep
    """

    @abstractmethod
    def present(self, output_dto: RunSweepOutputDto) -> Dict:
        """ Present the output dto
        """
