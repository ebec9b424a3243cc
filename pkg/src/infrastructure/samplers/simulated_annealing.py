""" Metropolis simulated annealing
"""
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from src.domain.entities.anneal_schedule import BetaSchedule
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.spin_model import SpinModel
from src.infrastructure.samplers import kernels
from src.infrastructure.samplers.random_streams import generator, random_spins, read_seeds, site_order
from src.interactor.errors.error_classes import FieldValueNotPermittedException

SWEEP_CHUNK = 256


def anneal_read(read_seed, csr, betas: np.ndarray, n_spins: int, randomize: bool) -> np.ndarray:
    """One read: random start, then one Metropolis pass per entry of ``betas``."""
    rng = generator(read_seed)
    spins = random_spins(rng, n_spins)
    for start in range(0, betas.shape[0], SWEEP_CHUNK):
        chunk = betas[start:start + SWEEP_CHUNK]
        uniforms = rng.random((chunk.shape[0], n_spins))
        order = site_order(rng, chunk.shape[0], n_spins, randomize)
        kernels.metropolis_sweeps(spins, *csr, chunk, uniforms, order)
    return spins


def simulated_anneal(
        model: SpinModel,
        reads: int,
        sweeps: int,
        beta_schedule: Optional[BetaSchedule] = None,
        seed: int = 0,
        randomize: bool = False,
        n_jobs: int = 1,
) -> SampleSet:
    """ Independent annealing reads with inverse temperature rising along the schedule.
    :param model: SpinModel
    :param reads: number of reads, at least 1
    :param sweeps: Metropolis passes per read, at least 1
    :param beta_schedule: defaults to a geometric ramp from 0.1 to 10
    :param seed: base seed; output is a pure function of (seed, reads, sweeps, schedule)
    :param randomize: random site order per pass instead of sequential order
    :param n_jobs: joblib workers; results are merged in read order
    :return: SampleSet
    """
    if reads < 1:
        raise FieldValueNotPermittedException("reads", str(reads))
    if sweeps < 1:
        raise FieldValueNotPermittedException("sweeps", str(sweeps))
    schedule = beta_schedule if beta_schedule is not None else BetaSchedule()
    betas = schedule.betas(sweeps)
    csr = kernels.csr_arrays(model)
    seeds = read_seeds(seed, reads)

    configs = Parallel(n_jobs=n_jobs)(
        delayed(anneal_read)(read_seed, csr, betas, model.n_spins, randomize) for read_seed in seeds
    )
    return SampleSet(
        model=model,
        configs=np.stack(configs),
        seeds=seeds,
        info={"engine": "sa", "seed": seed, "reads": reads, "sweeps": sweeps,
              "beta_schedule": schedule.to_dict(), "randomize": randomize},
    )
