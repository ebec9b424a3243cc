""" This module contains the ProcessHandler of the command line
"""

import sys
from typing import Dict, List, Optional, Sequence

from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.run_config import help_text, parse_config
from src.infrastructure.services.service_container import ServiceContainer

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
HELP_FLAGS = ("-h", "--help", "help")


def error_line(exception: BaseException) -> str:
    """``error: <Class>: <message>`` on one line."""
    message = " ".join(str(exception).split())
    return f"error: {type(exception).__name__}: {message}"


class CliProcessHandler:
    """ Dispatches ``<subcommand> [options]`` to its controller
    """

    def __init__(self, service_container: ServiceContainer) -> None:
        self.logger = service_container.logger
        self.options: Dict[str, CliControllerInterface] = {}
        self.summaries: Dict[str, str] = {}

    def add_option(self, option: str, controller: CliControllerInterface, summary: str = "") -> None:
        """ Register a subcommand
        @param option: subcommand name
        @param controller: controller run for it
        @param summary: one line shown in the usage text
        """
        self.options[option] = controller
        self.summaries[option] = summary

    def usage(self) -> str:
        lines = [f"usage: lieb-kagome <{'|'.join(self.options)}> [--key value ...] [key=value ...]", "",
                 "commands:"]
        lines.extend(f"  {option:<8} {self.summaries[option]}" for option in self.options)
        lines.extend(["", help_text()])
        return "\n".join(lines)

    def execute(self, argv: Optional[Sequence[str]] = None) -> int:
        """ Run one subcommand
        :param argv: command-line tokens without the program name
        :return: exit code
        """
        tokens: List[str] = list(sys.argv[1:] if argv is None else argv)
        if not tokens:
            print(self.usage(), file=sys.stderr)
            return EXIT_USAGE
        if any(token in HELP_FLAGS for token in tokens):
            print(self.usage())
            return EXIT_OK
        choice, flags = tokens[0], tokens[1:]
        controller = self.options.get(choice)
        if controller is None:
            print(f"error: UsageError: unknown command '{choice}'", file=sys.stderr)
            self.logger.log_info(f"Invalid user choice: {choice}")
            return EXIT_USAGE
        try:
            run_config = parse_config(flags=flags)
            self.logger.set_verbosity(run_config.verbosity)
            self.logger.log_info(f"Command {choice} with {' '.join(flags) or 'defaults'}")
            controller.execute(run_config)
        except Exception as exception:  # pylint: disable=broad-except
            self.logger.log_exception(str(exception))
            print(error_line(exception), file=sys.stderr)
            return EXIT_FAILURE
        return EXIT_OK
