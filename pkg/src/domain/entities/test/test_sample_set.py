# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import numpy as np
import pytest

from src.domain.entities.sample_set import SampleSet
from src.interactor.errors.error_classes import ConfigLengthMismatchException, EmptySampleSetException


def _samples(model, rows, chain_breaks=None):
    configs = np.array(rows)
    return SampleSet(model=model, configs=configs, seeds=np.arange(configs.shape[0], dtype=np.uint64),
                     chain_breaks=chain_breaks)


def test_sample_set_energies(fixture_triangle_model):
    samples = _samples(fixture_triangle_model, [[1, 1, -1], [1, 1, 1], [-1, 1, -1]])

    np.testing.assert_allclose(samples.energies, [-0.6, 1.8, -0.6])
    assert samples.reads == len(samples) == 3
    assert samples.n_spins == 3
    assert samples.min_energy == pytest.approx(-0.6)
    assert samples.chain_break_rate is None


def test_sample_set_ground_states(fixture_triangle_model):
    samples = _samples(fixture_triangle_model, [[1, 1, -1], [1, 1, 1], [-1, 1, -1]])
    ground = samples.ground_states()

    assert ground.reads == 2
    assert ground.seeds.tolist() == [0, 2]
    assert samples.ground_mask().tolist() == [True, False, True]


def test_sample_set_records(fixture_triangle_model):
    samples = _samples(fixture_triangle_model, [[1, 1, -1], [1, 1, 1]], chain_breaks=np.array([0, 3]))
    records = list(samples)

    assert records[1].energy == pytest.approx(1.8)
    assert records[1].seed == 1
    assert records[1].chain_breaks == 3
    assert records[0].config.tolist() == [1, 1, -1]


def test_sample_set_chain_break_rate(fixture_triangle_model):
    samples = _samples(fixture_triangle_model, [[1, 1, -1], [1, 1, 1]], chain_breaks=np.array([0, 3]))

    assert samples.chain_break_rate == pytest.approx(0.5)


def test_sample_set_rejects_empty(fixture_triangle_model):
    with pytest.raises(EmptySampleSetException) as exception_info:
        SampleSet(model=fixture_triangle_model, configs=np.zeros((0, 3), dtype=np.int8),
                  seeds=np.zeros(0, dtype=np.uint64))
    assert str(exception_info.value) == "Sample set is empty"


def test_sample_set_rejects_length(fixture_triangle_model):
    with pytest.raises(ConfigLengthMismatchException):
        _samples(fixture_triangle_model, [[1, 1]])


def test_sample_set_rejects_seed_count(fixture_triangle_model):
    with pytest.raises(ValueError):
        SampleSet(model=fixture_triangle_model, configs=np.ones((2, 3), dtype=np.int8),
                  seeds=np.zeros(1, dtype=np.uint64))


def test_sample_set_is_read_only(fixture_triangle_model):
    samples = _samples(fixture_triangle_model, [[1, 1, -1]])

    with pytest.raises(ValueError):
        samples.configs[0, 0] = -1
