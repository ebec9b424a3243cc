# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import numpy as np
import pytest

from src.domain.entities.anneal_schedule import AnnealSchedule, BetaSchedule
from src.domain.entities.engine_spec import EngineSpec
from src.domain.value_objects import BetaScheduleKind, EngineName
from src.interactor.errors.error_classes import FieldValueNotPermittedException, ScheduleException


def test_beta_schedule_geometric():
    betas = BetaSchedule(0.1, 10.0).betas(3)

    np.testing.assert_allclose(betas, [0.1, 1.0, 10.0])


def test_beta_schedule_linear():
    betas = BetaSchedule(1.0, 3.0, BetaScheduleKind.LINEAR).betas(3)

    np.testing.assert_allclose(betas, [1.0, 2.0, 3.0])


def test_beta_schedule_single_sweep_uses_final_value():
    assert BetaSchedule(0.1, 10.0).betas(1).tolist() == [10.0]


def test_beta_schedule_explicit_values():
    schedule = BetaSchedule(values=(0.5, 0.5, 2.0))

    assert schedule.betas(3).tolist() == [0.5, 0.5, 2.0]
    with pytest.raises(ScheduleException) as exception_info:
        schedule.betas(4)
    assert str(exception_info.value) == "Invalid schedule: explicit schedule has 3 values for 4 sweeps"


@pytest.mark.parametrize("kwargs", [
    {"beta_start": 0.0},
    {"beta_start": 5.0, "beta_end": 1.0},
    {"values": ()},
    {"values": (1.0, 0.5)},
])
def test_beta_schedule_rejects(kwargs):
    with pytest.raises(ScheduleException):
        BetaSchedule(**kwargs)


def test_anneal_schedule_defaults():
    schedule = AnnealSchedule()
    s = schedule.s_values()

    assert s.shape == (1000,)
    assert s[0] == 0.0 and s[-1] == 1.0
    np.testing.assert_allclose(schedule.classical([0.0, 0.5, 1.0]), [0.0, 0.5, 1.0])
    np.testing.assert_allclose(schedule.transverse([0.0, 0.5, 1.0]), [3.0, 1.5, 0.0])
    assert not schedule.is_classical


def test_anneal_schedule_single_step():
    assert AnnealSchedule(steps=1).s_values().tolist() == [1.0]


def test_anneal_schedule_zero_field_is_classical():
    assert AnnealSchedule(gamma0=0.0).is_classical


def test_anneal_schedule_piecewise_profile():
    schedule = AnnealSchedule(classical_profile=((0.0, 0.0), (0.5, 1.0), (1.0, 1.0)))

    np.testing.assert_allclose(schedule.classical([0.25, 0.75]), [0.5, 1.0])


@pytest.mark.parametrize("kwargs, message", [
    ({"gamma0": -1.0}, "gamma0 must be non-negative"),
    ({"steps": 0}, "steps must be at least 1"),
    ({"classical_profile": ((0.0, 0.2), (1.0, 1.0))}, "classical scale must vanish at s=0"),
    ({"transverse_profile": ((0.0, 1.0), (1.0, 0.1))}, "transverse field must vanish at s=1"),
    ({"classical_profile": ((0.0, 0.0), (0.5, 1.0), (1.0, 0.5))},
     "classical scale must be nondecreasing"),
    ({"transverse_profile": ((0.0, 0.5), (0.5, 1.0), (1.0, 0.0))},
     "transverse field must be nonincreasing"),
    ({"classical_profile": ((0.0, 0.0), (0.9, 1.0))},
     "classical profile must cover s from 0 to 1 in increasing order"),
])
def test_anneal_schedule_rejects(kwargs, message):
    with pytest.raises(ScheduleException) as exception_info:
        AnnealSchedule(**kwargs)
    assert str(exception_info.value) == f"Invalid schedule: {message}"


def test_engine_spec_defaults():
    engine = EngineSpec()

    assert engine.engine is EngineName.SA
    assert (engine.reads, engine.sweeps, engine.trotter) == (1000, 1000, 8)
    assert engine.j_fm == -2.0
    assert engine.describe()["sweeps"] == 1000


def test_engine_spec_describe_follows_engine():
    exact = EngineSpec(engine=EngineName.EXACT).describe()
    quantum = EngineSpec(engine=EngineName.SQA, embed=True).describe()

    assert exact == {"engine": "exact", "seed": 1234, "embed": False}
    assert quantum["trotter"] == 8
    assert quantum["j_fm"] == -2.0
    assert "sweeps" not in quantum


@pytest.mark.parametrize("field, value", [
    ("reads", 0), ("sweeps", 0), ("trotter", 1), ("sqa_beta", 0.0), ("seed", -1),
])
def test_engine_spec_rejects(field, value):
    with pytest.raises(FieldValueNotPermittedException) as exception_info:
        EngineSpec(**{field: value})
    assert exception_info.value.field_name == field
