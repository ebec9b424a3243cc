""" Module for the VerifyOraclePresenter
"""

from typing import Dict

from src.interactor.dtos.verify_oracle_dtos import VerifyOracleOutputDto
from src.interactor.interfaces.presenters.verify_oracle_presenter import VerifyOraclePresenterInterface


class VerifyOraclePresenter(VerifyOraclePresenterInterface):
    """ Class for the VerifyOraclePresenter
    """

    def present(self, output_dto: VerifyOracleOutputDto) -> Dict:
        """ Present the oracle suite report
        :param output_dto: VerifyOracleOutputDto
        :return: Dict
        """
        return {
            "action": "verify",
            "models": output_dto.models,
            "sa_rate": round(output_dto.sa_rate, 3),
            "sqa_rate": round(output_dto.sqa_rate, 3),
            "checks": output_dto.checks,
            "passed": not output_dto.failures,
        }
