""" This module contains exceptions for the Use Cases layer
"""


class FieldValueNotPermittedException(Exception):
    """ Exception raised when a field holds a value outside its domain """

    def __init__(self, field_name: str, field_value: str) -> None:
        self.field_name = field_name
        self.field_value = field_value

    def __str__(self) -> str:
        return f"{self.field_name.capitalize()}: {self.field_value} is not \
permitted"


class LatticeSizeException(FieldValueNotPermittedException):
    """ Exception raised when the unit-cell count is not positive """

    def __init__(self, size: int) -> None:
        super().__init__("L", str(size))

    def __str__(self) -> str:
        return f"Lattice size L={self.field_value} is not permitted, L must be at least 1"


class ShearOutOfRangeException(FieldValueNotPermittedException):
    """ Exception raised when a shear parameter leaves [0, 1] """

    def __init__(self, shear: float) -> None:
        super().__init__("shear", str(shear))

    def __str__(self) -> str:
        return f"Shear {self.field_value} is outside [0, 1]"


class ConfigLengthMismatchException(Exception):
    """ Exception raised when a spin configuration does not fit the model """

    def __init__(self, expected: int, received: int) -> None:
        self.expected = expected
        self.received = received

    def __str__(self) -> str:
        return f"Configuration length {self.received} does not match {self.expected} spins"


class SiteIndexException(Exception):
    """ Exception raised when a site index is out of range """

    def __init__(self, index: int, size: int) -> None:
        self.index = index
        self.size = size

    def __str__(self) -> str:
        return f"Site index {self.index} is out of range for {self.size} sites"


class EnumerationLimitException(Exception):
    """ Exception raised when exhaustive enumeration is asked for too many spins """

    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit

    def __str__(self) -> str:
        return f"Exact enumeration supports at most {self.limit} spins, got {self.size}"


class ScheduleException(Exception):
    """ Exception raised when an annealing schedule is invalid """

    def __init__(self, message: str) -> None:
        self.message = message

    def __str__(self) -> str:
        return f"Invalid schedule: {self.message}"


class EmptySampleSetException(Exception):
    """ Exception raised when an observable is asked of no reads """

    def __str__(self) -> str:
        return "Sample set is empty"


class ResolutionException(FieldValueNotPermittedException):
    """ Exception raised when a q-grid resolution is too coarse """

    def __init__(self, resolution: int, minimum: int) -> None:
        super().__init__("resolution", str(resolution))
        self.minimum = minimum

    def __str__(self) -> str:
        return f"Resolution {self.field_value} is below the minimum of {self.minimum}"


class ZoneException(FieldValueNotPermittedException):
    """ Exception raised when a reciprocal zone is unknown """

    def __init__(self, zone: str) -> None:
        super().__init__("zone", str(zone))

    def __str__(self) -> str:
        return f"Zone '{self.field_value}' is not one of square, hexagonal"


class ConfigurationException(Exception):
    """ Exception raised when a run configuration key is invalid """

    def __init__(self, key: str, message: str) -> None:
        self.key = key
        self.message = message

    def __str__(self) -> str:
        return f"Invalid configuration key '{self.key}': {self.message}"


class SweepPointFailedException(Exception):
    """ Exception raised when one point of a parameter sweep fails
    The cause is kept as text so the exception survives the trip back from a worker process.
    """

    def __init__(self, jprime: float, h: float, cause) -> None:
        self.jprime = jprime
        self.h = h
        self.cause = cause if isinstance(cause, str) else f"{type(cause).__name__}: {cause}"
        super().__init__(jprime, h, self.cause)

    def __str__(self) -> str:
        return f"Sweep point (jprime={self.jprime:g}, h={self.h:g}) failed: {self.cause}"


class OutputWriteException(Exception):
    """ Exception raised when a result file cannot be written """

    def __init__(self, path: str, cause: Exception) -> None:
        self.path = path
        self.cause = cause

    def __str__(self) -> str:
        return f"Writing '{self.path}' failed: {self.cause}"


class SampleDumpFormatException(Exception):
    """ Exception raised when a samples dump cannot be parsed """

    def __init__(self, message: str) -> None:
        self.message = message

    def __str__(self) -> str:
        return f"Malformed samples dump: {self.message}"


class VerificationFailedException(Exception):
    """ Exception raised when the oracle suite misses its thresholds """

    def __init__(self, failures: list) -> None:
        self.failures = failures

    def __str__(self) -> str:
        return "Verification failed: " + "; ".join(self.failures)
