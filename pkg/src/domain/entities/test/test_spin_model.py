# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.lattice import build_lattice, triangle
from src.domain.entities.spin_model import CHAIN_LENGTH, SpinModel, embed, flip, unembed
from src.interactor.errors.error_classes import ConfigLengthMismatchException, SiteIndexException

LATTICE = build_lattice(2)

couplings = st.floats(min_value=0.1, max_value=2.0, allow_nan=False)
fields = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
configs = st.lists(st.sampled_from([-1, 1]), min_size=LATTICE.n_sites, max_size=LATTICE.n_sites)


def test_triangle_energy(fixture_triangle_model):
    assert fixture_triangle_model.energy([1, 1, -1]) == pytest.approx(-0.6)
    assert fixture_triangle_model.energy([1, 1, 1]) == pytest.approx(1.8)


def test_local_field(fixture_triangle_model):
    assert fixture_triangle_model.local_field([1, 1, -1], 0) == pytest.approx(0.0)
    assert fixture_triangle_model.local_field([1, 1, 1], 0) == pytest.approx(1.2)


def test_from_lattice_binds_couplings(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 1.3, 0.2)

    assert sorted(set(model.couplings.tolist())) == [0.6, 1.3]
    np.testing.assert_array_equal(model.couplings[fixture_lattice.jprime_mask], 1.3)
    np.testing.assert_array_equal(model.fields, 0.2)
    assert model.describe() == {"n_spins": 8, "J": 0.6, "jprime": 1.3, "h": 0.2}


def test_from_lattice_field_overrides(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 0.6, 0.1, field_overrides={3: -0.5})

    assert model.fields[3] == -0.5
    assert model.fields[0] == 0.1


def test_from_lattice_rejects_override_site(fixture_lattice):
    with pytest.raises(SiteIndexException) as exception_info:
        SpinModel.from_lattice(fixture_lattice, 0.6, 0.6, field_overrides={8: 1.0})
    assert str(exception_info.value) == "Site index 8 is out of range for 8 sites"


def test_energy_rejects_wrong_length(fixture_triangle_model):
    with pytest.raises(ConfigLengthMismatchException) as exception_info:
        fixture_triangle_model.energy([1, 1])
    assert str(exception_info.value) == "Configuration length 2 does not match 3 spins"


def test_energy_rejects_non_spin_values(fixture_triangle_model):
    with pytest.raises(ValueError):
        fixture_triangle_model.energy([1, 0, -1])


def test_local_field_rejects_site(fixture_triangle_model):
    with pytest.raises(SiteIndexException):
        fixture_triangle_model.local_field([1, 1, 1], 3)


def test_single_spin_energy(fixture_single_spin_model):
    assert fixture_single_spin_model.energy([-1]) == -0.5
    assert fixture_single_spin_model.energy([1]) == 0.5


def test_model_rejects_non_finite_couplings():
    with pytest.raises(ValueError):
        SpinModel(n_spins=2, edges=np.array([[0, 1]]), couplings=np.array([np.inf]),
                  fields=np.zeros(2))


def test_adjacency_is_symmetric(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 1.1)
    matrix = model.adjacency.toarray()

    np.testing.assert_array_equal(matrix, matrix.T)
    assert np.count_nonzero(matrix) == 2 * fixture_lattice.n_bonds


@settings(max_examples=50, deadline=None)
@given(J=couplings, jprime=couplings, h=fields, config=configs,
       site=st.integers(min_value=0, max_value=LATTICE.n_sites - 1))
def test_flip_changes_energy_by_local_field(J, jprime, h, config, site):
    model = SpinModel.from_lattice(LATTICE, J, jprime, h)
    delta = model.energy(flip(config, site)) - model.energy(config)

    assert delta == pytest.approx(-2 * config[site] * model.local_field(config, site), abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(J=couplings, jprime=couplings, config=configs)
def test_global_flip_symmetry_without_field(J, jprime, config):
    model = SpinModel.from_lattice(LATTICE, J, jprime)
    spins = np.array(config)

    assert model.energy(-spins) == pytest.approx(model.energy(spins), abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(J=couplings, jprime=couplings, h=fields,
       rows=st.lists(configs, min_size=1, max_size=5))
def test_energies_match_energy(J, jprime, h, rows):
    model = SpinModel.from_lattice(LATTICE, J, jprime, h)

    np.testing.assert_allclose(model.energies(np.array(rows)), [model.energy(row) for row in rows],
                               atol=1e-9)


def test_extensive_over_disjoint_copies():
    base = SpinModel.from_lattice(triangle(), 0.6, 0.6)
    doubled = SpinModel.from_lattice(triangle().replicate(2), 0.6, 0.6)

    assert doubled.energy([1, 1, -1, 1, 1, -1]) == pytest.approx(2 * base.energy([1, 1, -1]))


def test_embed_sizes(fixture_lattice):
    model = SpinModel.from_lattice(fixture_lattice, 0.6, 0.6)
    physical, embedding = embed(model)

    assert physical.n_spins == embedding.n_physical == 24
    assert np.count_nonzero(physical.couplings == -2.0) == 16
    assert physical.edges.shape[0] == fixture_lattice.n_bonds + 16
    np.testing.assert_allclose(physical.fields.sum(), model.fields.sum())


def test_embed_aligned_energy_shift(fixture_triangle_model):
    physical, embedding = embed(fixture_triangle_model)
    logical = np.array([1, 1, -1])

    assert embedding.chain_constant == pytest.approx(-12.0)
    assert physical.energy(embedding.expand(logical)) == pytest.approx(-12.6)
    assert physical.energy(embedding.expand(logical)) - embedding.chain_constant == \
        pytest.approx(fixture_triangle_model.energy(logical))


def test_embed_custom_coupling(fixture_triangle_model):
    physical, embedding = embed(fixture_triangle_model, j_fm=-5.0)

    assert embedding.j_fm == -5.0
    assert np.count_nonzero(physical.couplings == -5.0) == 2 * fixture_triangle_model.n_spins


def test_unembed_majority_vote():
    _, embedding = embed(SpinModel.from_lattice(triangle(), 0.6, 0.6))
    physical = np.array([1, -1, 1, -1, -1, -1, 1, 1, -1])
    logical, breaks = unembed(physical, embedding)

    assert logical.tolist() == [1, -1, 1]
    assert int(breaks) == 2


def test_unembed_inverts_expand(fixture_triangle_model):
    _, embedding = embed(fixture_triangle_model)
    configs = np.array([[1, 1, -1], [-1, 1, 1]])
    logical, breaks = unembed(embedding.expand(configs), embedding)

    np.testing.assert_array_equal(logical, configs)
    assert breaks.tolist() == [0, 0]


def test_unembed_rejects_length(fixture_triangle_model):
    _, embedding = embed(fixture_triangle_model)

    with pytest.raises(ConfigLengthMismatchException):
        unembed(np.ones(3 * CHAIN_LENGTH - 1), embedding)


def test_model_arrays_are_read_only(fixture_triangle_model):
    with pytest.raises(ValueError):
        fixture_triangle_model.couplings[0] = 1.0
