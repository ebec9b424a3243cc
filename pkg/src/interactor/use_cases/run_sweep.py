""" Parameter sweeps over (J', h) and the use case that writes their tables and maps
"""
from dataclasses import replace
from datetime import datetime, timezone
from typing import Dict, List, Optional

from joblib import Parallel, delayed

from src import __version__
from src.domain.entities.lattice import Lattice, build_lattice
from src.domain.entities.spin_model import SpinModel
from src.domain.entities.sweep_plan import PointResult, SweepPlan, SweepPoint, SweepResult
from src.domain.observables import magnetization, staggered_magnetization, structure_factor, zone_for
from src.domain.value_objects import OutputKind
from src.interactor.dtos.plan_dtos import RunSweepInputDto, RunSweepOutputDto
from src.interactor.errors.error_classes import SweepPointFailedException
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.presenters.run_sweep_presenter import RunSweepPresenterInterface
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface
from src.interactor.validations.run_sweep_validator import RunSweepInputDtoValidator


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def sample_point(plan: SweepPlan, lattice: Lattice, point: SweepPoint,
                 sampler: SamplerInterface) -> PointResult:
    """ Sample one (J', h) point and reduce it to its observables.
    Any failure is re-raised as SweepPointFailedException naming the point.
    """
    try:
        model = SpinModel.from_lattice(lattice, plan.J, point.jprime, point.h)
        samples = sampler.sample(model, plan.engine_for(point))
        grid = None
        if OutputKind.STRUCTURE_FACTOR in plan.outputs:
            grid = structure_factor(
                samples,
                zone=zone_for(point.jprime, plan.J, plan.zone),
                resolution=plan.resolution,
                shear=plan.shear,
                ground_only=plan.ground_only,
            )
        return PointResult(
            jprime=point.jprime,
            h=point.h,
            seed=point.seed,
            magnetization=magnetization(samples, plan.ground_only),
            staggered=staggered_magnetization(samples, plan.ground_only),
            min_energy=samples.min_energy,
            chain_break_rate=samples.chain_break_rate,
            structure_factor=grid,
            samples=samples if plan.keep_samples else None,
        )
    except SweepPointFailedException:
        raise
    except Exception as error:
        raise SweepPointFailedException(point.jprime, point.h, error) from error


def run_sweep(plan: SweepPlan, sampler: SamplerInterface,
              logger: Optional[LoggerInterface] = None) -> SweepResult:
    """ Sample every point of the plan.
    Points run on ``plan.workers`` joblib workers; each point's seed depends on its
    own coordinates, so results do not depend on the worker count or on the other points.
    :param plan: SweepPlan
    :param sampler: SamplerInterface
    :param logger: optional progress logger
    :return: SweepResult keyed by (J', h)
    """
    started = _now()
    lattice = build_lattice(plan.size, plan.boundary)
    points = plan.points()
    if logger is not None:
        logger.log_info(f"Sweep over {len(points)} points on {lattice!r}, workers={plan.workers}")
    results = Parallel(n_jobs=plan.workers)(
        delayed(sample_point)(plan, lattice, point, sampler) for point in points
    )
    if logger is not None:
        for row in results:
            logger.log_debug(f"Point jprime={row.jprime:g} h={row.h:g}: engine={plan.engine.engine} "
                             f"reads={row.magnetization.reads} seed={row.seed} min_energy={row.min_energy:.6g} "
                             f"<|m|>={row.magnetization.mean:.6f} +- {row.magnetization.stderr:.6f}")
    provenance: Dict = {
        "plan": plan.describe(),
        "lattice": {"sites": lattice.n_sites, "bonds": lattice.n_bonds,
                    "neel_magnetization": lattice.neel_magnetization()},
        "points": len(points),
        "started": started,
        "finished": _now(),
        "version": __version__,
    }
    return SweepResult(plan=plan, points={row.key: row for row in results}, provenance=provenance)


def field_curve(plan: SweepPlan, sampler: SamplerInterface, jprime: float) -> List[PointResult]:
    """ <|m|> against h at one J', ordered by h.
    Points keep the seeds they have in the full plan.
    """
    restricted = replace(plan, jprimes=(float(jprime),))
    return run_sweep(restricted, sampler).curve(float(jprime))


def phase_map(plan: SweepPlan, sampler: SamplerInterface,
              logger: Optional[LoggerInterface] = None) -> SweepResult:
    """Sweep with S(q) at every point; the zone follows ``plan.zone`` (auto switches at J' = J)."""
    with_maps = replace(plan, outputs=frozenset(plan.outputs | {OutputKind.STRUCTURE_FACTOR}))
    return run_sweep(with_maps, sampler, logger)


class RunSweepUseCase:
    """ Runs a sweep and writes its tables, maps and manifest
    """

    def __init__(
            self,
            presenter: RunSweepPresenterInterface,
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
            input_dto: RunSweepInputDto
    ) -> Dict:
        """ Run the sweep of ``input_dto.plan``
        :param input_dto: The input data transfer object.
        :type input_dto: RunSweepInputDto
        :return: Dict
        """
        validator = RunSweepInputDtoValidator(input_dto.to_dict())
        validator.validate()

        plan = replace(input_dto.plan, keep_samples=input_dto.dump_samples)
        result = run_sweep(plan, self.sampler, self.logger)
        files = self.repository.write_outputs(result, dump_samples=input_dto.dump_samples)
        mismatched = self.repository.verify_manifest()
        if mismatched:
            self.logger.log_warning(f"Manifest mismatch after write: {', '.join(mismatched)}")

        output_dto = RunSweepOutputDto(result=result, output_dir=input_dto.output_dir, files=files)
        presenter_response = self.presenter.present(output_dto)
        self.logger.log_info(f"Sweep of {len(result)} points written to {input_dto.output_dir}")
        return presenter_response
