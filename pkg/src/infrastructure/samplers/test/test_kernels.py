# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import itertools

import numpy as np
import pytest

from src.domain.entities.lattice import build_lattice
from src.domain.entities.spin_model import SpinModel
from src.infrastructure.samplers import kernels
from src.infrastructure.samplers.random_streams import (generator, random_spins, read_seeds,
                                                        site_order)


def test_csr_arrays_types(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 1.0, 0.2)
    indptr, indices, data, fields = kernels.csr_arrays(model)

    assert indptr.dtype == np.int64 and indices.dtype == np.int64
    assert data.dtype == np.float64 and fields.dtype == np.float64
    assert indptr.shape == (fixture_lattice.n_sites + 1,)
    assert data.shape == (2 * fixture_lattice.n_bonds,)


def test_local_field_kernel_matches_model(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 1.0, 0.2)
    csr = kernels.csr_arrays(model)
    spins = np.array([1, -1, 1, 1, -1, -1, 1, -1], dtype=np.int8)

    for site in range(model.n_spins):
        assert kernels.local_field(spins, site, *csr) == pytest.approx(model.local_field(spins, site))


def test_gray_code_minimum_matches_brute_force():
    lattice = build_lattice(2).subset(range(12))
    model = SpinModel.from_lattice(lattice, 0.7, 1.3, 0.25)
    configs = np.array(list(itertools.product([-1, 1], repeat=model.n_spins)))

    minimum = kernels.gray_code_minimum(model.n_spins, *kernels.csr_arrays(model))

    assert minimum == pytest.approx(model.energies(configs).min())


def test_gray_code_collect_returns_configs_below_threshold(fixture_triangle_model):
    found = kernels.gray_code_collect(3, *kernels.csr_arrays(fixture_triangle_model), -0.5)

    assert found.shape == (6, 3)
    np.testing.assert_allclose(fixture_triangle_model.energies(found), -0.6)


def test_metropolis_samples_boltzmann_weights():
    beta = 0.5
    model = SpinModel(n_spins=2, edges=np.array([[0, 1]]), couplings=np.array([1.0]),
                      fields=np.zeros(2))
    csr = kernels.csr_arrays(model)
    rng = generator(17)
    spins = np.ones(2, dtype=np.int8)
    order = np.arange(2, dtype=np.int64).reshape(1, 2)
    sweeps = 100000
    uniforms = rng.random((sweeps, 2))
    aligned = 0
    for sweep in range(sweeps):
        kernels.metropolis_sweeps(spins, *csr, np.array([beta]), uniforms[sweep:sweep + 1], order)
        aligned += int(spins[0] == spins[1])

    expected = np.exp(-beta) / (np.exp(-beta) + np.exp(beta))
    assert aligned / sweeps == pytest.approx(expected, abs=0.01)


def test_metropolis_always_accepts_downhill(fixture_triangle_model):
    spins = np.ones(3, dtype=np.int8)
    csr = kernels.csr_arrays(fixture_triangle_model)
    uniforms = np.full((1, 3), 0.999999)
    order = np.arange(3, dtype=np.int64).reshape(1, 3)

    kernels.metropolis_sweeps(spins, *csr, np.array([100.0]), uniforms, order)

    assert fixture_triangle_model.energy(spins) == pytest.approx(-0.6)


def test_read_seeds_are_prefix_stable():
    np.testing.assert_array_equal(read_seeds(7, 10)[:4], read_seeds(7, 4))
    assert read_seeds(7, 4).dtype == np.uint64
    assert len(set(read_seeds(7, 100).tolist())) == 100
    assert not np.array_equal(read_seeds(7, 4), read_seeds(8, 4))


def test_generator_is_reproducible():
    first = generator(123).random(5)
    second = generator(123).random(5)

    np.testing.assert_array_equal(first, second)


def test_random_spins():
    spins = random_spins(generator(1), (4, 50))

    assert spins.dtype == np.int8
    assert set(np.unique(spins).tolist()) == {-1, 1}


def test_site_order():
    sequential = site_order(generator(1), 3, 5, randomize=False)
    shuffled = site_order(generator(1), 3, 5, randomize=True)

    assert sequential.tolist() == [[0, 1, 2, 3, 4]]
    assert shuffled.shape == (3, 5)
    assert all(sorted(row) == [0, 1, 2, 3, 4] for row in shuffled.tolist())
