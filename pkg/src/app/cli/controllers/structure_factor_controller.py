from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.presenters.structure_factor_presenter import StructureFactorPresenter
from src.app.cli.run_config import RunConfig
from src.app.cli.views.structure_factor_view import StructureFactorView
from src.infrastructure.services.service_container import ServiceContainer
from src.interactor.dtos.structure_factor_dtos import StructureFactorInputDto
from src.interactor.errors.error_classes import ConfigurationException
from src.interactor.use_cases.structure_factor import StructureFactorUseCase


class StructureFactorController(CliControllerInterface):
    """ S(q) of an existing samples dump
    """

    def __init__(self, service_container: ServiceContainer):
        self.logger = service_container.logger
        self.service_container = service_container

    def execute(self, run_config: RunConfig) -> None:
        if not run_config.samples:
            raise ConfigurationException("samples", "the sq command needs a samples dump")
        presenter = StructureFactorPresenter()
        input_dto = StructureFactorInputDto(
            samples_path=run_config.samples,
            zone=run_config.zone,
            resolution=run_config.resolution,
            shear=run_config.shear,
            ground_only=run_config.ground_only,
            output_dir=run_config.output_dir,
        )
        repository = self.service_container.repository(run_config.output_dir)
        use_case = StructureFactorUseCase(presenter, repository, self.logger)
        result = use_case.execute(input_dto)
        view = StructureFactorView()
        view.show(result)
