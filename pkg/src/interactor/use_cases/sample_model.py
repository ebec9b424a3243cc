""" This module is responsible for a single-point run.
"""
from dataclasses import replace
from typing import Dict

from src.domain.entities.lattice import build_lattice
from src.domain.entities.sweep_plan import SweepResult
from src.interactor.dtos.plan_dtos import SampleModelInputDto, SampleModelOutputDto
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.presenters.sample_model_presenter import SampleModelPresenterInterface
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface
from src.interactor.use_cases.run_sweep import sample_point
from src.interactor.validations.sample_model_validator import SampleModelInputDtoValidator


class SampleModelUseCase:
    """ Samples one (J', h) point and writes its tables, map and samples dump.
    """

    def __init__(
            self,
            presenter: SampleModelPresenterInterface,
            repository: ResultRepositoryInterface,
            sampler: SamplerInterface,
            logger: LoggerInterface,
    ):
        self.presenter = presenter
        self.repository = repository
        self.sampler = sampler
        self.logger = logger

    def execute(
            self,
            input_dto: SampleModelInputDto
    ) -> Dict:
        """ Run the point of ``input_dto.plan``
        :param input_dto: The input data transfer object.
        :type input_dto: SampleModelInputDto
        :return: Dict
        """

        validator = SampleModelInputDtoValidator(input_dto.to_dict())
        validator.validate()

        plan = replace(input_dto.plan, keep_samples=True)
        lattice = build_lattice(plan.size, plan.boundary)
        point = plan.points()[0]
        row = sample_point(plan, lattice, point, self.sampler)

        result = SweepResult(plan=plan, points={row.key: row},
                             provenance={"plan": plan.describe(), "seed": point.seed})
        files = [self.repository.write_lattice(lattice)]
        files.extend(self.repository.write_outputs(result, dump_samples=True))

        output_dto = SampleModelOutputDto(
            point=row,
            neel_magnetization=lattice.neel_magnetization(),
            output_dir=input_dto.output_dir,
            files=files,
        )
        presenter_response = self.presenter.present(output_dto)
        self.logger.log_info(f"Point jprime={point.jprime:g} h={point.h:g} sampled with "
                             f"{plan.engine.engine}: <|m|>={row.magnetization.mean:.6f}")
        return presenter_response
