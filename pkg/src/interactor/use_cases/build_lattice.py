""" This module is responsible for dumping a lattice.
"""
from typing import Dict

from src.domain.entities.lattice import build_lattice
from src.domain.value_objects import Boundary
from src.interactor.dtos.build_lattice_dtos import BuildLatticeInputDto, BuildLatticeOutputDto
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.presenters.build_lattice_presenter import BuildLatticePresenterInterface
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface
from src.interactor.validations.build_lattice_validator import BuildLatticeInputDtoValidator


class BuildLatticeUseCase:
    """ Builds the interpolation lattice and writes its dump.
    """

    def __init__(
            self,
            presenter: BuildLatticePresenterInterface,
            repository: ResultRepositoryInterface,
            logger: LoggerInterface,
    ):
        self.presenter = presenter
        self.repository = repository
        self.logger = logger

    def execute(
            self,
            input_dto: BuildLatticeInputDto
    ) -> Dict:
        """ Build and dump the lattice.
        :param input_dto: The input data transfer object.
        :type input_dto: BuildLatticeInputDto
        :return: Dict
        """

        validator = BuildLatticeInputDtoValidator(input_dto.to_dict())
        validator.validate()

        lattice = build_lattice(input_dto.size, Boundary(input_dto.boundary))
        files = [self.repository.write_lattice(lattice), self.repository.write_manifest()]

        output_dto = BuildLatticeOutputDto(lattice=lattice, output_dir=input_dto.output_dir, files=files)
        presenter_response = self.presenter.present(output_dto)
        self.logger.log_info(f"Lattice L={input_dto.size} boundary={input_dto.boundary} dumped "
                             f"with {lattice.n_sites} sites")
        return presenter_response
