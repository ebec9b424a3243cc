from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.presenters.verify_oracle_presenter import VerifyOraclePresenter
from src.app.cli.run_config import RunConfig
from src.app.cli.views.verify_oracle_view import VerifyOracleView
from src.infrastructure.services.service_container import ServiceContainer
from src.interactor.dtos.verify_oracle_dtos import VerifyOracleInputDto
from src.interactor.use_cases.verify_oracle import VerifyOracleUseCase


class VerifyOracleController(CliControllerInterface):
    """ Run the built-in oracle suite
    """

    def __init__(self, service_container: ServiceContainer):
        self.logger = service_container.logger
        self.sampler = service_container.sampler

    def execute(self, run_config: RunConfig) -> None:
        presenter = VerifyOraclePresenter()
        input_dto = VerifyOracleInputDto(models=run_config.models, seed=run_config.seed)
        use_case = VerifyOracleUseCase(presenter, self.sampler, self.logger)
        result = use_case.execute(input_dto)
        view = VerifyOracleView()
        view.show(result)
