# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
from src.app.cli.controllers.verify_oracle_controller import VerifyOracleController
from src.app.cli.run_config import parse_config
from src.interactor.dtos.verify_oracle_dtos import VerifyOracleInputDto
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface


def test_verify_oracle_controller(mocker):
    service_container_mock = mocker.patch(
        'src.app.cli.controllers.verify_oracle_controller.ServiceContainer')
    service_container_mock.logger = mocker.patch.object(LoggerInterface, "log_info")
    service_container_mock.sampler = mocker.patch.object(SamplerInterface, "sample")

    mock_presenter = mocker.patch(
        'src.app.cli.controllers.verify_oracle_controller.VerifyOraclePresenter')
    mock_use_case = mocker.patch(
        'src.app.cli.controllers.verify_oracle_controller.VerifyOracleUseCase')
    mock_use_case_instance = mock_use_case.return_value
    mock_view = mocker.patch(
        'src.app.cli.controllers.verify_oracle_controller.VerifyOracleView')
    result_use_case = {"action": "verify", "passed": True}
    mock_use_case_instance.execute.return_value = result_use_case

    controller = VerifyOracleController(service_container_mock)
    controller.execute(parse_config(flags=["--models", "25", "--seed", "9"]))

    mock_use_case.assert_called_once_with(
        mock_presenter.return_value,
        service_container_mock.sampler,
        service_container_mock.logger,
    )
    mock_use_case_instance.execute.assert_called_once_with(VerifyOracleInputDto(models=25, seed=9))
    mock_view.return_value.show.assert_called_once_with(result_use_case)
