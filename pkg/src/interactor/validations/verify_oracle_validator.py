from typing import Dict

from src.interactor.validations.base_input_validator import BaseInputValidator

ORACLE_SPIN_LIMIT = 20


class VerifyOracleInputDtoValidator(BaseInputValidator):
    """ Validates the input data for VerifyOracleUseCase.
    :param input_data: The input data to be validated.
    """

    def __init__(self, input_data: Dict) -> None:
        super().__init__(input_data)
        self.input_data = input_data
        self.__schema = {
            "models": {"type": "integer", "min": 1, "required": True},
            "seed": {"type": "integer", "min": 0, "required": True},
            "max_spins": {"type": "integer", "min": 3, "max": ORACLE_SPIN_LIMIT, "required": True},
            "sa_reads": {"type": "integer", "min": 1, "required": True},
            "sa_sweeps": {"type": "integer", "min": 1, "required": True},
            "sqa_reads": {"type": "integer", "min": 1, "required": True},
            "trotter": {"type": "integer", "min": 2, "required": True},
            "sa_threshold": {"type": "float", "min": 0.0, "max": 1.0, "required": True},
            "sqa_threshold": {"type": "float", "min": 0.0, "max": 1.0, "required": True},
        }

    def validate(self) -> None:
        """ Validates the input data
        """
        super().verify(self.__schema)
