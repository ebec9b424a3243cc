from typing import Dict

from src.domain.value_objects import Boundary
from src.interactor.validations.base_input_validator import BaseInputValidator


class BuildLatticeInputDtoValidator(BaseInputValidator):
    """ Validates the input data for BuildLatticeUseCase.
    :param input_data: The input data to be validated.
    """

    def __init__(self, input_data: Dict) -> None:
        super().__init__(input_data)
        self.input_data = input_data
        self.__schema = {
            "size": {
                "type": "integer",
                "min": 1,
                "required": True,
            },
            "boundary": {
                "type": "string",
                "allowed": [str(boundary) for boundary in Boundary],
                "required": True,
            },
            "output_dir": {
                "type": "string",
                "required": True,
                "empty": False
            },
        }

    def validate(self) -> None:
        """ Validates the input data
        """
        super().verify(self.__schema)
