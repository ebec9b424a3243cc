""" This module contains the CliControllerInterface class
"""

from abc import ABC, abstractmethod

from src.app.cli.run_config import RunConfig


class CliControllerInterface(ABC):
    """ One subcommand of the command line
    """

    @abstractmethod
    def execute(self, run_config: RunConfig) -> None:
        """ Executes the controller
        :param run_config: validated run parameters
        """
