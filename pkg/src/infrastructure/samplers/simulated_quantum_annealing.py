""" Path-integral simulated quantum annealing

The transverse field is emulated by P imaginary-time replicas of the classical
system (Suzuki-Trotter). Each replica sees the problem couplings scaled by
J(s)/P and is coupled ferromagnetically to its two neighbours along a ring by
J_perp(s) = -1/(2 beta) ln tanh(beta Gamma(s) / P).
"""
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from src.domain.entities.anneal_schedule import AnnealSchedule
from src.domain.entities.engine_spec import DEFAULT_SQA_BETA, DEFAULT_TROTTER
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.spin_model import SpinModel
from src.infrastructure.samplers import kernels
from src.infrastructure.samplers.random_streams import generator, random_spins, read_seeds, site_order
from src.interactor.errors.error_classes import FieldValueNotPermittedException

MIN_TANH_ARGUMENT = 1e-12
STEP_CHUNK = 64


def replica_coupling(schedule: AnnealSchedule, beta: float, trotter: int) -> np.ndarray:
    """ beta * J_perp at every schedule step.
    A schedule with gamma0 = 0 has no transverse field and leaves the replicas independent;
    otherwise the tanh argument is clamped at 1e-12, which freezes the replicas together
    where Gamma(s) vanishes.
    """
    s = schedule.s_values()
    if schedule.is_classical:
        return np.zeros_like(s)
    argument = np.maximum(beta * schedule.transverse(s) / trotter, MIN_TANH_ARGUMENT)
    return -0.5 * np.log(np.tanh(argument))


def quantum_anneal_read(read_seed, csr, weights: np.ndarray, coupling: np.ndarray,
                        trotter: int, n_spins: int, randomize: bool) -> np.ndarray:
    """All replicas of one read, after the full schedule."""
    rng = generator(read_seed)
    replicas = random_spins(rng, (trotter, n_spins))
    for start in range(0, weights.shape[0], STEP_CHUNK):
        chunk = slice(start, start + STEP_CHUNK)
        steps = weights[chunk].shape[0]
        uniforms = rng.random((steps, trotter, n_spins))
        order = site_order(rng, steps * trotter, n_spins, randomize)
        kernels.path_integral_sweeps(replicas, *csr, weights[chunk], coupling[chunk],
                                     uniforms, order)
    return replicas


def simulated_quantum_anneal(
        model: SpinModel,
        reads: int,
        trotter: int = DEFAULT_TROTTER,
        schedule: Optional[AnnealSchedule] = None,
        beta: float = DEFAULT_SQA_BETA,
        seed: int = 0,
        randomize: bool = False,
        n_jobs: int = 1,
) -> SampleSet:
    """ Path-integral annealing reads; s advances from 0 to 1 with one pass over all replicas per step.
    :param model: SpinModel
    :param reads: number of reads, at least 1
    :param trotter: replicas P, at least 2
    :param schedule: defaults to J(s) = s, Gamma(s) = 3 (1 - s), 1000 steps
    :param beta: inverse temperature, positive
    :param seed: base seed
    :param randomize: random site order per replica pass
    :param n_jobs: joblib workers; results are merged in read order
    :return: SampleSet whose reads are the lowest-energy replica of each run
    """
    if reads < 1:
        raise FieldValueNotPermittedException("reads", str(reads))
    if trotter < 2:
        raise FieldValueNotPermittedException("trotter", str(trotter))
    if not beta > 0.0:
        raise FieldValueNotPermittedException("beta", str(beta))
    schedule = schedule if schedule is not None else AnnealSchedule()
    weights = beta * schedule.classical(schedule.s_values()) / trotter
    coupling = replica_coupling(schedule, beta, trotter)
    csr = kernels.csr_arrays(model)
    seeds = read_seeds(seed, reads)

    runs = Parallel(n_jobs=n_jobs)(
        delayed(quantum_anneal_read)(read_seed, csr, weights, coupling, trotter,
                                     model.n_spins, randomize)
        for read_seed in seeds
    )
    configs = []
    for replicas in runs:
        # first replica wins ties
        configs.append(replicas[int(np.argmin(model.energies(replicas)))])
    return SampleSet(
        model=model,
        configs=np.stack(configs),
        seeds=seeds,
        info={"engine": "sqa", "seed": seed, "reads": reads, "trotter": trotter, "beta": beta,
              "anneal_schedule": schedule.to_dict(), "randomize": randomize},
    )
