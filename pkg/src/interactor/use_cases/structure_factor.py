""" This module is responsible for S(q) of an existing samples dump.
"""
from typing import Dict

from src.domain.observables import bragg_peak, structure_factor, zone_for
from src.domain.value_objects import Zone
from src.interactor.dtos.structure_factor_dtos import StructureFactorInputDto, StructureFactorOutputDto
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.presenters.structure_factor_presenter import \
    StructureFactorPresenterInterface
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface
from src.interactor.validations.structure_factor_validator import StructureFactorInputDtoValidator


class StructureFactorUseCase:
    """ Recomputes S(q) from a samples dump; the result equals the one of the run that wrote it.
    """

    def __init__(
            self,
            presenter: StructureFactorPresenterInterface,
            repository: ResultRepositoryInterface,
            logger: LoggerInterface,
    ):
        self.presenter = presenter
        self.repository = repository
        self.logger = logger

    def execute(
            self,
            input_dto: StructureFactorInputDto
    ) -> Dict:
        """ Read the dump, compute S(q) and write its heatmap.
        :param input_dto: The input data transfer object.
        :type input_dto: StructureFactorInputDto
        :return: Dict
        """

        validator = StructureFactorInputDtoValidator(input_dto.to_dict())
        validator.validate()

        samples = self.repository.read_samples(input_dto.samples_path)
        model = samples.model
        grid = structure_factor(
            samples,
            zone=zone_for(model.jprime, model.J, Zone(input_dto.zone)),
            resolution=input_dto.resolution,
            shear=input_dto.shear,
            ground_only=input_dto.ground_only,
        )
        files = self.repository.write_structure_factor(model.jprime, model.h, grid)
        files.append(self.repository.write_manifest())

        output_dto = StructureFactorOutputDto(
            jprime=model.jprime,
            h=model.h,
            grid=grid,
            peak=bragg_peak(grid),
            output_dir=input_dto.output_dir,
            files=files,
        )
        presenter_response = self.presenter.present(output_dto)
        self.logger.log_info(f"S(q) of {input_dto.samples_path} on the {grid.zone} zone, "
                             f"{grid.reads} reads")
        return presenter_response
