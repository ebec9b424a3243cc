""" This module provides the base class BaseInputValidator for input validation
"""

from typing import Dict

from cerberus import Validator  # type: ignore


class BaseInputValidator:
    """ Cerberus validation of a DTO dictionary
    """

    def __init__(self, data: Dict):
        self.data = data
        self.errors: Dict = {}
        self.document: Dict = {}

    def verify(self, schema: Dict, allow_unknown: bool = False) -> Dict:
        """ Validates the input data against the provided schema
        :param schema: The schema to validate against
        :param allow_unknown: accept keys the schema does not name
        :return: the normalized (coerced, defaulted) document
        :raises ValueError: If the input data is invalid.
        """
        validator = Validator(schema, allow_unknown=allow_unknown)
        if not validator.validate(self.data):
            self.errors = validator.errors
            self._raise_validation_error()
        self.document = validator.document
        return self.document

    def _raise_validation_error(self):
        error_messages = []
        for field, messages in sorted(self.errors.items()):
            for message in messages:
                error_messages.append(f"{field.capitalize()}: {message}")
        raise ValueError("\n".join(error_messages))
