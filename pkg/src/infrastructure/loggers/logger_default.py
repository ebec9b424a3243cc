""" Module for LoggerDefault class."""

import logging
import os

from src.interactor.interfaces.logger.logger import VERBOSITY_LEVELS, LoggerInterface

LOG_FILE_NAME = "app.log"


class LoggerDefault(LoggerInterface):
    """File logger of the command line runs."""

    def __init__(self, log_dir: str = "logs", level: str = "INFO"):
        """ Create ``log_dir`` if needed and append to ``<log_dir>/app.log``.
        :param log_dir: directory of the log file
        :param level: name of the initial threshold
        """
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        logging.basicConfig(
            filename=os.path.join(log_dir, LOG_FILE_NAME),
            filemode="a",
            datefmt="%Y-%m-%d %H:%M:%S",
            format="%(asctime)-s - %(filename)s - %(lineno)s - %(levelname)s - %(message)s",
            level=getattr(logging, level.upper(), logging.INFO),
        )

    def set_verbosity(self, verbosity: int) -> None:
        index = min(max(int(verbosity), 0), len(VERBOSITY_LEVELS) - 1)
        logging.getLogger().setLevel(VERBOSITY_LEVELS[index])

    def log_debug(self, message: str) -> None:
        logging.debug(message)

    def log_info(self, message: str) -> None:
        logging.info(message)

    def log_warning(self, message: str) -> None:
        logging.warning(message)

    def log_error(self, message: str) -> None:
        logging.error(message)

    def log_exception(self, message: str) -> None:
        logging.exception(message)
