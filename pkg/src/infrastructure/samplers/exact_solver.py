""" Exhaustive ground-state enumeration, the oracle of the stochastic engines
"""
from typing import NamedTuple

import numpy as np

from src.domain.entities.sample_set import GROUND_TOLERANCE, SampleSet
from src.domain.entities.spin_model import SpinModel
from src.infrastructure.samplers import kernels
from src.interactor.errors.error_classes import EnumerationLimitException

MAX_EXACT_SPINS = 26


class ExactGround(NamedTuple):
    energy: float
    configs: np.ndarray
    degeneracy: int


def exact_ground(model: SpinModel, tolerance: float = GROUND_TOLERANCE) -> ExactGround:
    """ Scan all 2^N configurations.
    :param model: SpinModel with at most 26 spins
    :param tolerance: energies within this of the minimum count as ground states
    :return: ExactGround with every minimizing configuration in Gray-code order
    """
    if model.n_spins > MAX_EXACT_SPINS:
        raise EnumerationLimitException(model.n_spins, MAX_EXACT_SPINS)
    if model.n_spins == 0:
        return ExactGround(0.0, np.zeros((1, 0), dtype=np.int8), 1)
    indptr, indices, data, fields = kernels.csr_arrays(model)
    walk_minimum = kernels.gray_code_minimum(model.n_spins, indptr, indices, data, fields)
    configs = kernels.gray_code_collect(model.n_spins, indptr, indices, data, fields,
                                        walk_minimum + tolerance)
    energies = model.energies(configs)
    energy = float(energies.min())
    keep = energies <= energy + tolerance
    return ExactGround(energy=energy, configs=configs[keep], degeneracy=int(keep.sum()))


def exact_sample(model: SpinModel) -> SampleSet:
    """Every ground configuration exactly once."""
    ground = exact_ground(model)
    return SampleSet(
        model=model,
        configs=ground.configs,
        seeds=np.zeros(ground.degeneracy, dtype=np.uint64),
        info={"engine": "exact", "degeneracy": ground.degeneracy},
    )
