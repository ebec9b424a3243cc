from dataclasses import replace

from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.presenters.sample_model_presenter import SampleModelPresenter
from src.app.cli.run_config import RunConfig
from src.app.cli.views.sample_model_view import SampleModelView
from src.infrastructure.services.service_container import ServiceContainer
from src.interactor.dtos.plan_dtos import SampleModelInputDto
from src.interactor.use_cases.sample_model import SampleModelUseCase


class SampleModelController(CliControllerInterface):
    """ Sample a single (J', h) point; list-valued jprime and h contribute their first value
    """

    def __init__(self, service_container: ServiceContainer):
        self.logger = service_container.logger
        self.sampler = service_container.sampler
        self.service_container = service_container

    def execute(self, run_config: RunConfig) -> None:
        presenter = SampleModelPresenter()
        plan = run_config.to_plan()
        if len(plan.jprimes) > 1 or len(plan.fields) > 1:
            plan = replace(plan, jprimes=plan.jprimes[:1], fields=plan.fields[:1])
            self.logger.log_info(f"Sampling the first point jprime={plan.jprimes[0]:g} h={plan.fields[0]:g}")
        input_dto = SampleModelInputDto(plan, run_config.output_dir)
        repository = self.service_container.repository(run_config.output_dir)
        use_case = SampleModelUseCase(presenter, repository, self.sampler, self.logger)
        result = use_case.execute(input_dto)
        view = SampleModelView()
        view.show(result)
