# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring


import pytest

from src.interactor.validations.build_lattice_validator import BuildLatticeInputDtoValidator


def test_build_lattice_validator_valid_data():
    validator = BuildLatticeInputDtoValidator({"size": 8, "boundary": "edge", "output_dir": "out"})
    validator.validate()


def test_build_lattice_validator_calls_verify(mocker):
    mocker.patch("src.interactor.validations.base_input_validator.BaseInputValidator.verify")
    validator = BuildLatticeInputDtoValidator({"size": 8, "boundary": "edge", "output_dir": "out"})
    validator.validate()
    validator.verify.assert_called_once()  # pylint: disable=E1101


@pytest.mark.parametrize("input_data, message", [
    ({"size": 0, "boundary": "corner", "output_dir": "out"}, "Size: min value is 1"),
    ({"size": 2, "boundary": "hexagon", "output_dir": "out"}, "Boundary: unallowed value hexagon"),
    ({"size": 2, "boundary": "corner", "output_dir": ""}, "Output_dir: empty values not allowed"),
])
def test_build_lattice_validator_invalid_data(input_data, message):
    validator = BuildLatticeInputDtoValidator(input_data)
    with pytest.raises(ValueError) as exception_info:
        validator.validate()
    assert str(exception_info.value) == message
