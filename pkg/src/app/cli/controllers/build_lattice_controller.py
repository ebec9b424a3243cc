from src.app.cli.interfaces.cli_controller_interface import CliControllerInterface
from src.app.cli.presenters.build_lattice_presenter import BuildLatticePresenter
from src.app.cli.run_config import RunConfig
from src.app.cli.views.build_lattice_view import BuildLatticeView
from src.infrastructure.services.service_container import ServiceContainer
from src.interactor.dtos.build_lattice_dtos import BuildLatticeInputDto
from src.interactor.use_cases.build_lattice import BuildLatticeUseCase


class BuildLatticeController(CliControllerInterface):
    """ Dump the lattice
    """

    def __init__(self, service_container: ServiceContainer):
        self.logger = service_container.logger
        self.service_container = service_container

    def execute(self, run_config: RunConfig) -> None:
        presenter = BuildLatticePresenter()
        input_dto = BuildLatticeInputDto(run_config.L, run_config.boundary, run_config.output_dir)
        repository = self.service_container.repository(run_config.output_dir)
        use_case = BuildLatticeUseCase(presenter, repository, self.logger)
        result = use_case.execute(input_dto)
        view = BuildLatticeView()
        view.show(result)
