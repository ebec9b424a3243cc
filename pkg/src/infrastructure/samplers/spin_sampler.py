""" Dispatch of a SpinModel to one of the sampling engines
"""
from typing import Optional

from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.spin_model import SpinModel, embed, unembed
from src.domain.value_objects import EngineName
from src.infrastructure.samplers.exact_solver import exact_sample
from src.infrastructure.samplers.simulated_annealing import simulated_anneal
from src.infrastructure.samplers.simulated_quantum_annealing import simulated_quantum_anneal
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface


class SpinSampler(SamplerInterface):
    """ Runs exact, sa or sqa; embedded specs run on the chain model and are decoded by majority vote
    """

    def __init__(self, logger: Optional[LoggerInterface] = None):
        self.logger = logger

    def _run(self, model: SpinModel, engine: EngineSpec) -> SampleSet:
        if engine.engine is EngineName.EXACT:
            return exact_sample(model)
        if engine.engine is EngineName.SA:
            return simulated_anneal(
                model,
                reads=engine.reads,
                sweeps=engine.sweeps,
                beta_schedule=engine.beta_schedule,
                seed=engine.seed,
                randomize=engine.randomize,
                n_jobs=engine.n_jobs,
            )
        if engine.engine is EngineName.SQA:
            return simulated_quantum_anneal(
                model,
                reads=engine.reads,
                trotter=engine.trotter,
                schedule=engine.anneal_schedule,
                beta=engine.sqa_beta,
                seed=engine.seed,
                randomize=engine.randomize,
                n_jobs=engine.n_jobs,
            )
        raise ValueError(f"Unknown engine '{engine.engine}'")

    def sample(self, model: SpinModel, engine: EngineSpec) -> SampleSet:
        if not engine.embed:
            samples = self._run(model, engine)
        else:
            physical, embedding = embed(model, engine.j_fm)
            raw = self._run(physical, engine)
            logical, breaks = unembed(raw.configs, embedding)
            samples = SampleSet(
                model=model,
                configs=logical,
                seeds=raw.seeds,
                chain_breaks=breaks,
                info={**raw.info, "embed": True, "j_fm": embedding.j_fm,
                      "physical_spins": embedding.n_physical},
            )
        if self.logger is not None:
            self.logger.log_debug(
                f"Sampled {model!r} with {engine.engine}: reads={samples.reads} "
                f"min_energy={samples.min_energy:.6g}"
            )
        return samples


def sample(model: SpinModel, engine: EngineSpec) -> SampleSet:
    return SpinSampler().sample(model, engine)
