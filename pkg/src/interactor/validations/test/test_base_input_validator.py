# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring


from typing import Dict

import pytest

from src.interactor.validations.base_input_validator import BaseInputValidator


class BaseValidator(BaseInputValidator):
    def __init__(self, data: Dict):
        super().__init__(data)
        self.schema = {
            "boundary": {
                "type": "string",
                "minlength": 4,
                "maxlength": 6,
                "required": True,
                "empty": False
            },
            "zone": {
                "type": "string",
                "minlength": 4,
                "maxlength": 9,
                "required": False,
                "empty": True
            },
            "resolution": {
                "type": "integer",
                "coerce": int,
                "required": False,
            },
        }

    def validate(self):
        return super().verify(self.schema)


def test_base_validator_with_valid_data():
    data = {'boundary': 'edge'}
    validator = BaseValidator(data)
    assert validator.validate() == {'boundary': 'edge'}


def test_base_validator_returns_coerced_document():
    validator = BaseValidator({'boundary': 'corner', 'resolution': '64'})
    assert validator.validate() == {'boundary': 'corner', 'resolution': 64}
    assert validator.document['resolution'] == 64


def test_base_validator_with_small_data():
    data = {'boundary': 'a', 'zone': 'a'}
    validator = BaseValidator(data)
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == "Boundary: min length is 4\n\
Zone: min length is 4"


def test_base_validator_with_long_data():
    data = {'boundary': 'everywhere'}
    validator = BaseValidator(data)
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == "Boundary: max length is 6"


def test_base_validator_with_empty_data():
    data = {'boundary': ''}
    validator = BaseValidator(data)
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == "Boundary: empty values not allowed"


def test_base_validator_without_required_data():
    data = {}
    validator = BaseValidator(data)
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == "Boundary: required field"


def test_base_validator_with_unknown_field():
    validator = BaseValidator({'boundary': 'edge', 'colour': 'red'})
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == "Colour: unknown field"
