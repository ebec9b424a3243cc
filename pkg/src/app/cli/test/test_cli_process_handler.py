# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import pytest

from src.app.cli.cli_process_handler import (EXIT_FAILURE, EXIT_OK, EXIT_USAGE, CliProcessHandler,
                                             error_line)
from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.interactor.errors.error_classes import LatticeSizeException
from src.interactor.interfaces.logger.logger import LoggerInterface


@pytest.fixture
def handler(mocker):
    service_container_mock = mocker.patch('src.app.cli.cli_process_handler.ServiceContainer')
    service_container_mock.logger = mocker.patch.object(LoggerInterface, "log_info")
    process = CliProcessHandler(service_container_mock)
    controller = mocker.MagicMock(spec=CliControllerInterface)
    process.add_option("lattice", controller, "dump the lattice file")
    return process, controller, service_container_mock.logger


def test_execute_runs_controller(handler):
    process, controller, logger = handler

    assert process.execute(["lattice", "--L", "3", "--verbosity", "2"]) == EXIT_OK

    run_config = controller.execute.call_args[0][0]
    assert run_config.L == 3
    logger.set_verbosity.assert_called_once_with(2)
    logger.log_info.assert_called_once_with("Command lattice with --L 3 --verbosity 2")


def test_execute_without_arguments(handler, capsys):
    process, controller, _ = handler

    assert process.execute([]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("usage: lieb-kagome <lattice>")
    controller.execute.assert_not_called()


def test_execute_help(handler, capsys):
    process, _, _ = handler

    assert process.execute(["lattice", "--help"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "  lattice  dump the lattice file" in out
    assert "--jprime" in out


def test_execute_unknown_command(handler, capsys):
    process, controller, logger = handler

    assert process.execute(["anneal"]) == EXIT_USAGE
    assert capsys.readouterr().err == "error: UsageError: unknown command 'anneal'\n"
    logger.log_info.assert_called_once_with("Invalid user choice: anneal")
    controller.execute.assert_not_called()


def test_execute_reports_configuration_error(handler, capsys):
    process, controller, logger = handler

    assert process.execute(["lattice", "--L", "zero"]) == EXIT_FAILURE
    err = capsys.readouterr().err
    assert err.startswith("error: ConfigurationException: Invalid configuration key 'L': ")
    assert err.count("\n") == 1
    logger.log_exception.assert_called_once()
    controller.execute.assert_not_called()


def test_execute_reports_controller_error(handler, capsys):
    process, controller, _ = handler
    controller.execute.side_effect = LatticeSizeException(0)

    assert process.execute(["lattice"]) == EXIT_FAILURE
    assert capsys.readouterr().err == \
        "error: LatticeSizeException: Lattice size L=0 is not permitted, L must be at least 1\n"


def test_error_line_is_single_line():
    assert error_line(ValueError("Size: min value is 1\nBoundary: unallowed value x")) == \
        "error: ValueError: Size: min value is 1 Boundary: unallowed value x"
