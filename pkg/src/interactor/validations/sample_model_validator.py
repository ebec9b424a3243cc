from typing import Dict

from src.interactor.validations.base_input_validator import BaseInputValidator


class SampleModelInputDtoValidator(BaseInputValidator):
    """ Validates the input data for SampleModelUseCase: exactly one (J', h) point.
    :param input_data: The input data to be validated.
    """

    def __init__(self, input_data: Dict) -> None:
        super().__init__(input_data)
        self.input_data = input_data
        self.__schema = {
            "jprime": {
                "type": "list",
                "minlength": 1,
                "maxlength": 1,
                "schema": {"type": "float"},
                "required": True,
            },
            "h": {
                "type": "list",
                "minlength": 1,
                "maxlength": 1,
                "schema": {"type": "float"},
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
