""" Per-read random streams

Every read owns a Philox (counter-based) generator keyed by a seed spawned
from the base seed with numpy's SeedSequence, so a read's stream depends on
the base seed and the read index only: not on the read count, the worker
count or the platform.
"""

import numpy as np


def read_seeds(seed: int, reads: int) -> np.ndarray:
    """ Seeds of the first ``reads`` streams of ``seed``.
    :param seed: non-negative base seed
    :param reads: number of streams
    :return: uint64 array
    """
    children = np.random.SeedSequence(int(seed)).spawn(reads)
    return np.array([child.generate_state(1, np.uint64)[0] for child in children],
                    dtype=np.uint64)


def generator(read_seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(read_seed)))


def random_spins(rng: np.random.Generator, shape) -> np.ndarray:
    return (2 * rng.integers(0, 2, size=shape) - 1).astype(np.int8)


def site_order(rng: np.random.Generator, rows: int, n_spins: int, randomize: bool) -> np.ndarray:
    """Update order per sweep; sequential order is a single shared row."""
    if not randomize:
        return np.arange(n_spins, dtype=np.int64).reshape(1, n_spins)
    return np.stack([rng.permutation(n_spins) for _ in range(rows)]).astype(np.int64)
