from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.presenters.run_sweep_presenter import RunSweepPresenter
from src.app.cli.run_config import RunConfig
from src.app.cli.views.run_sweep_view import RunSweepView
from src.infrastructure.services.service_container import ServiceContainer
from src.interactor.dtos.plan_dtos import RunSweepInputDto
from src.interactor.use_cases.run_sweep import RunSweepUseCase


class RunSweepController(CliControllerInterface):
    """ Sweep the (J', h) grid
    """

    def __init__(self, service_container: ServiceContainer):
        self.logger = service_container.logger
        self.sampler = service_container.sampler
        self.service_container = service_container

    def execute(self, run_config: RunConfig) -> None:
        presenter = RunSweepPresenter()
        input_dto = RunSweepInputDto(run_config.to_plan(), run_config.output_dir, run_config.dump_samples)
        repository = self.service_container.repository(run_config.output_dir)
        use_case = RunSweepUseCase(presenter, repository, self.sampler, self.logger)
        result = use_case.execute(input_dto)
        view = RunSweepView()
        view.show(result)
