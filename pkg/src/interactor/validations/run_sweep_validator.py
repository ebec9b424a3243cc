from typing import Dict

from src.interactor.validations.base_input_validator import BaseInputValidator


class RunSweepInputDtoValidator(BaseInputValidator):
    """ Validates the input data for RunSweepUseCase.
    :param input_data: The input data to be validated.
    """

    def __init__(self, input_data: Dict) -> None:
        super().__init__(input_data)
        self.input_data = input_data
        self.__schema = {
            "jprime": {
                "type": "list",
                "minlength": 1,
                "schema": {"type": "float"},
                "required": True,
            },
            "h": {
                "type": "list",
                "minlength": 1,
                "schema": {"type": "float"},
                "required": True,
            },
            "output_dir": {
                "type": "string",
                "required": True,
                "empty": False
            },
            "dump_samples": {
                "type": "boolean",
                "required": True,
            },
        }

    def validate(self) -> None:
        """ Validates the input data
        """
        super().verify(self.__schema)
