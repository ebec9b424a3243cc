""" Logger interface of the use cases and samplers.
"""

from abc import ABC, abstractmethod

VERBOSITY_LEVELS = ("WARNING", "INFO", "DEBUG")


class LoggerInterface(ABC):
    """Run log: progress at INFO, per-point and per-engine detail at DEBUG."""

    @abstractmethod
    def set_verbosity(self, verbosity: int) -> None:
        """Select the threshold: 0 warnings, 1 progress, 2 per-point detail.
        :param verbosity: 0, 1 or 2; larger values clamp to 2.
        """

    @abstractmethod
    def log_debug(self, message: str) -> None:
        """Engine settings, per-point observables."""

    @abstractmethod
    def log_info(self, message: str) -> None:
        """One line per finished command or sweep."""

    @abstractmethod
    def log_warning(self, message: str) -> None:
        """Recoverable problems such as a manifest mismatch."""

    @abstractmethod
    def log_error(self, message: str) -> None:
        """Failed checks that end the command."""

    @abstractmethod
    def log_exception(self, message: str) -> None:
        """Error with the active traceback attached.
        :param message: one-line summary of the failure
        """
