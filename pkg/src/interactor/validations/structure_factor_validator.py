from typing import Dict

from src.domain.observables import MIN_RESOLUTION
from src.domain.value_objects import Zone
from src.interactor.validations.base_input_validator import BaseInputValidator


class StructureFactorInputDtoValidator(BaseInputValidator):
    """ Validates the input data for StructureFactorUseCase.
    :param input_data: The input data to be validated.
    """

    def __init__(self, input_data: Dict) -> None:
        super().__init__(input_data)
        self.input_data = input_data
        self.__schema = {
            "samples_path": {
                "type": "string",
                "required": True,
                "empty": False
            },
            "zone": {
                "type": "string",
                "allowed": [str(zone) for zone in Zone],
                "required": True,
            },
            "resolution": {
                "type": "integer",
                "min": MIN_RESOLUTION,
                "required": True,
            },
            "shear": {
                "type": "float",
                "min": 0.0,
                "max": 1.0,
                "required": True,
            },
            "ground_only": {
                "type": "boolean",
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
