""" Module for the VerifyOraclePresenterInterface
"""

from abc import ABC, abstractmethod
from typing import Dict

from src.interactor.dtos.verify_oracle_dtos import VerifyOracleOutputDto


class VerifyOraclePresenterInterface(ABC):
    """ Shapes the oracle suite report
    """

    @abstractmethod
    def present(self, output_dto: VerifyOracleOutputDto) -> Dict:
        """ Present the output dto
        """
