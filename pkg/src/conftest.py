# pylint: disable=missing-module-docstring
import numpy as np
import pytest

from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.lattice import build_lattice, triangle
from src.domain.entities.spin_model import SpinModel
from src.domain.entities.sweep_plan import SweepPlan
from src.domain.value_objects import EngineName, OutputKind


@pytest.fixture
def fixture_lattice():
    """Fixture with the smallest lattice, L=1 (8 sites, 10 bonds)"""
    return build_lattice(1)


@pytest.fixture
def fixture_triangle_model():
    """Fixture with the {J, J, J'} triangle at J = J' = 0.6"""
    return SpinModel.from_lattice(triangle(), 0.6, 0.6)


@pytest.fixture
def fixture_single_spin_model():
    """Fixture with one spin in a field h = 0.5"""
    return SpinModel(
        n_spins=1,
        edges=np.zeros((0, 2), dtype=np.int64),
        couplings=np.zeros(0),
        fields=np.array([0.5]),
    )


@pytest.fixture
def fixture_run_config():
    """Fixture with a small single-point run"""
    return {
        "L": 2,
        "J": 0.6,
        "jprime": 0.35,
        "h": 0.0,
        "engine": "sa",
        "reads": 20,
        "sweeps": 50,
        "seed": 7,
        "resolution": 16,
    }


@pytest.fixture
def fixture_small_plan():
    """Fixture with a three-point simulated-annealing plan on L=2"""
    return SweepPlan(
        size=2,
        jprimes=(0.35, 0.6, 1.0),
        fields=(0.0,),
        engine=EngineSpec(engine=EngineName.SA, reads=20, sweeps=50, seed=11),
        outputs=frozenset({OutputKind.MAGNETIZATION, OutputKind.STRUCTURE_FACTOR}),
        resolution=16,
    )
