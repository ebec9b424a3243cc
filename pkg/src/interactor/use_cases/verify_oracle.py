""" This module is responsible for the built-in oracle suite.
"""
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from src.domain.entities.anneal_schedule import AnnealSchedule, BetaSchedule
from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.lattice import Lattice, build_lattice, triangle
from src.domain.entities.spin_model import SpinModel, embed, unembed
from src.domain.value_objects import Boundary, EngineName
from src.interactor.dtos.verify_oracle_dtos import VerifyOracleInputDto, VerifyOracleOutputDto
from src.interactor.errors.error_classes import VerificationFailedException
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.presenters.verify_oracle_presenter import VerifyOraclePresenterInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface
from src.interactor.validations.verify_oracle_validator import VerifyOracleInputDtoValidator

ENERGY_TOLERANCE = 1e-9
TRIANGLE_COUPLING = 0.6
TRIANGLE_ENERGY = -0.6
TRIANGLE_DEGENERACY = 6
MAX_CHAIN_BREAK_RATE = 0.05
J_RANGE = (0.3, 1.0)
JPRIME_RANGE = (0.3, 1.7)
H_RANGE = (0.0, 0.6)


@dataclass(frozen=True)
class OracleCase:
    model: SpinModel
    seed: int


def oracle_lattices(max_spins: int) -> List[Lattice]:
    """Small lattices the suite cycles through, each with at most ``max_spins`` sites."""
    full = build_lattice(2)
    pool = [build_lattice(1), build_lattice(2, Boundary.EDGE), triangle()]
    lattices = [lattice for lattice in pool if lattice.n_sites <= max_spins]
    head = full.subset(range(min(full.n_sites, max_spins)))
    if head.n_sites not in {lattice.n_sites for lattice in lattices}:
        lattices.append(head)
    return lattices


def oracle_cases(count: int, seed: int, max_spins: int) -> List[OracleCase]:
    """ Random models with J, J' and h drawn uniformly from the study ranges.
    :param count: number of models
    :param seed: seed of the parameter draws and of the per-model engine seeds
    :param max_spins: largest site count
    """
    rng = np.random.Generator(np.random.Philox(seed))
    lattices = oracle_lattices(max_spins)
    cases = []
    for index in range(count):
        lattice = lattices[index % len(lattices)]
        J = float(rng.uniform(*J_RANGE))
        jprime = float(rng.uniform(*JPRIME_RANGE))
        h = float(rng.uniform(*H_RANGE))
        cases.append(OracleCase(SpinModel.from_lattice(lattice, J, jprime, h),
                                int(rng.integers(0, 2 ** 62))))
    return cases


class VerifyOracleUseCase:
    """ Compares the stochastic engines with exhaustive enumeration on small models.
    """

    def __init__(
            self,
            presenter: VerifyOraclePresenterInterface,
            sampler: SamplerInterface,
            logger: LoggerInterface,
    ):
        self.presenter = presenter
        self.sampler = sampler
        self.logger = logger

    def _triangle_checks(self, input_dto: VerifyOracleInputDto) -> Dict[str, bool]:
        model = SpinModel.from_lattice(triangle(), TRIANGLE_COUPLING, TRIANGLE_COUPLING)
        exact = self.sampler.sample(model, EngineSpec(engine=EngineName.EXACT))
        embedded = self.sampler.sample(model, EngineSpec(
            engine=EngineName.SA, reads=input_dto.sa_reads, sweeps=input_dto.sa_sweeps,
            seed=input_dto.seed, embed=True))
        physical, embedding = embed(model)
        aligned = embedding.expand(exact.configs)
        decoded, breaks = unembed(aligned, embedding)
        shifted = physical.energies(aligned) - embedding.chain_constant
        return {
            "triangle_ground_energy": abs(exact.min_energy - TRIANGLE_ENERGY) <= ENERGY_TOLERANCE,
            "triangle_degeneracy": exact.reads == TRIANGLE_DEGENERACY,
            "embedded_ground_energy": abs(embedded.min_energy - TRIANGLE_ENERGY) <= ENERGY_TOLERANCE,
            "embedded_chain_breaks": embedded.chain_break_rate < MAX_CHAIN_BREAK_RATE,
            "unembed_identity": bool(np.array_equal(decoded, exact.configs) and not breaks.any()),
            "aligned_chain_energy": bool(np.allclose(shifted, exact.energies, rtol=0.0,
                                                     atol=ENERGY_TOLERANCE)),
        }

    def execute(
            self,
            input_dto: VerifyOracleInputDto
    ) -> Dict:
        """ Run the suite and fail below the hit-rate thresholds.
        :param input_dto: The input data transfer object.
        :type input_dto: VerifyOracleInputDto
        :return: Dict
        :raises VerificationFailedException: when any check fails
        """

        validator = VerifyOracleInputDtoValidator(input_dto.to_dict())
        validator.validate()

        sa_hits = 0
        sqa_hits = 0
        failures: List[str] = []
        for index, case in enumerate(oracle_cases(input_dto.models, input_dto.seed, input_dto.max_spins)):
            ground = self.sampler.sample(case.model, EngineSpec(engine=EngineName.EXACT)).min_energy
            annealed = self.sampler.sample(case.model, EngineSpec(
                engine=EngineName.SA, reads=input_dto.sa_reads, sweeps=input_dto.sa_sweeps,
                beta_schedule=BetaSchedule(), seed=case.seed))
            quantum = self.sampler.sample(case.model, EngineSpec(
                engine=EngineName.SQA, reads=input_dto.sqa_reads, trotter=input_dto.trotter,
                anneal_schedule=AnnealSchedule(), seed=case.seed))
            for name, samples in (("sa", annealed), ("sqa", quantum)):
                if samples.min_energy < ground - ENERGY_TOLERANCE:
                    failures.append(f"model {index}: {name} energy {samples.min_energy:.9g} "
                                    f"below exact ground {ground:.9g}")
            sa_hits += int(annealed.min_energy <= ground + ENERGY_TOLERANCE)
            sqa_hits += int(quantum.min_energy <= ground + ENERGY_TOLERANCE)
            self.logger.log_debug(f"Oracle model {index} ({case.model.n_spins} spins): exact={ground:.6g} "
                                  f"sa={annealed.min_energy:.6g} sqa={quantum.min_energy:.6g}")

        checks = self._triangle_checks(input_dto)
        failures.extend(f"check {name} failed" for name, passed in checks.items() if not passed)
        output_dto = VerifyOracleOutputDto(models=input_dto.models, sa_hits=sa_hits, sqa_hits=sqa_hits,
                                           checks=checks, failures=failures)
        if output_dto.sa_rate < input_dto.sa_threshold:
            failures.append(f"sa hit rate {output_dto.sa_rate:.3f} below {input_dto.sa_threshold:.3f}")
        if output_dto.sqa_rate < input_dto.sqa_threshold:
            failures.append(f"sqa hit rate {output_dto.sqa_rate:.3f} below {input_dto.sqa_threshold:.3f}")
        if failures:
            self.logger.log_error(f"Oracle suite failed: {'; '.join(failures)}")
            raise VerificationFailedException(failures)

        presenter_response = self.presenter.present(output_dto)
        self.logger.log_info(f"Oracle suite passed: sa {sa_hits}/{input_dto.models}, "
                             f"sqa {sqa_hits}/{input_dto.models}")
        return presenter_response
