""" This module has definition of the SpinModel entity and the chain embedding
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Tuple

import numpy as np
from scipy import sparse

from src.domain.entities.lattice import Lattice
from src.interactor.errors.error_classes import ConfigLengthMismatchException, SiteIndexException

CHAIN_LENGTH = 3
DEFAULT_J_FM = -2.0


@dataclass(frozen=True, eq=False)
class SpinModel:
    """Definition of the SpinModel entity, H = sum J_ij s_i s_j + sum h_i s_i
    :param n_spins: number of spins
    :param edges: (M, 2) spin index pairs
    :param couplings: coupling per edge; positive is antiferromagnetic
    :param fields: longitudinal field per spin; positive favours s = -1
    :param lattice: lattice the model was bound to, None for physical models
    :param J: coupling on J-class bonds
    :param jprime: coupling on J'-class bonds
    :param h: uniform field before per-site overrides
    """

    n_spins: int
    edges: np.ndarray
    couplings: np.ndarray
    fields: np.ndarray
    lattice: Optional[Lattice] = None
    J: float = float("nan")
    jprime: float = float("nan")
    h: float = 0.0
    field_overrides: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.edges.shape[0] != self.couplings.shape[0]:
            raise ValueError("Every edge needs exactly one coupling")
        if self.fields.shape[0] != self.n_spins:
            raise ValueError("Every spin needs exactly one field")
        if not (np.all(np.isfinite(self.couplings)) and np.all(np.isfinite(self.fields))):
            raise ValueError("Couplings and fields must be finite")
        for array in (self.edges, self.couplings, self.fields):
            array.flags.writeable = False

    @classmethod
    def from_lattice(cls, lattice: Lattice, J: float, jprime: float, h: float = 0.0,
                     field_overrides: Optional[Dict[int, float]] = None) -> "SpinModel":
        """Bind J, J' and h to a lattice."""
        overrides = dict(field_overrides or {})
        couplings = np.where(lattice.jprime_mask, float(jprime), float(J)).astype(np.float64)
        fields = np.full(lattice.n_sites, float(h), dtype=np.float64)
        for site, value in overrides.items():
            if not 0 <= site < lattice.n_sites:
                raise SiteIndexException(site, lattice.n_sites)
            fields[site] = float(value)
        return cls(
            n_spins=lattice.n_sites,
            edges=lattice.bonds.copy(),
            couplings=couplings,
            fields=fields,
            lattice=lattice,
            J=float(J),
            jprime=float(jprime),
            h=float(h),
            field_overrides=overrides,
        )

    @cached_property
    def adjacency(self) -> sparse.csr_matrix:
        """Symmetric coupling matrix in CSR form."""
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        data = np.concatenate([self.couplings, self.couplings])
        matrix = sparse.coo_matrix((data, (rows, cols)), shape=(self.n_spins, self.n_spins))
        matrix = matrix.tocsr()
        matrix.sort_indices()
        return matrix

    def check_config(self, config) -> np.ndarray:
        spins = np.asarray(config)
        if spins.shape[-1] != self.n_spins:
            raise ConfigLengthMismatchException(self.n_spins, spins.shape[-1])
        if not np.all(np.abs(spins) == 1):
            raise ValueError("Spin values must be -1 or +1")
        return spins

    def energy(self, config) -> float:
        """ Bond sum plus field sum for one configuration.
        :param config: sequence of +-1 of length n_spins
        :return: float
        """
        spins = self.check_config(config).astype(np.float64)
        bond_sum = np.dot(self.couplings, spins[self.edges[:, 0]] * spins[self.edges[:, 1]])
        return float(bond_sum + np.dot(self.fields, spins))

    def energies(self, configs) -> np.ndarray:
        """Vectorised energy over the rows of a (R, N) array."""
        spins = self.check_config(np.atleast_2d(configs)).astype(np.float64)
        products = spins[:, self.edges[:, 0]] * spins[:, self.edges[:, 1]]
        return products @ self.couplings + spins @ self.fields

    def local_field(self, config, site: int) -> float:
        """ h_i + sum_j J_ij s_j; flipping s_i changes the energy by -2 s_i times this.
        :param config: sequence of +-1
        :param site: spin index
        :return: float
        """
        spins = self.check_config(config)
        if not 0 <= site < self.n_spins:
            raise SiteIndexException(site, self.n_spins)
        start, stop = self.adjacency.indptr[site], self.adjacency.indptr[site + 1]
        neighbours = self.adjacency.indices[start:stop]
        return float(self.fields[site]
                     + np.dot(self.adjacency.data[start:stop], spins[neighbours].astype(np.float64)))

    def describe(self) -> Dict:
        return {"n_spins": self.n_spins, "J": self.J, "jprime": self.jprime, "h": self.h}

    def __repr__(self):
        return f"<SpinModel N={self.n_spins} J={self.J:g} J'={self.jprime:g} h={self.h:g}>"


def flip(config, site: int) -> np.ndarray:
    flipped = np.array(config, copy=True)
    flipped[site] = -flipped[site]
    return flipped


@dataclass(frozen=True, eq=False)
class ChainEmbedding:
    """Definition of a three-spin ferromagnetic chain per logical spin
    :param n_logical: logical spin count
    :param j_fm: intra-chain coupling
    :param chains: (n_logical, 3) physical spin indices per logical spin
    :param bond_carriers: physical pair carrying each logical edge
    """

    n_logical: int
    j_fm: float
    chains: np.ndarray
    bond_carriers: np.ndarray
    chain_length: int = CHAIN_LENGTH

    @property
    def n_physical(self) -> int:
        return self.n_logical * self.chain_length

    @property
    def chain_constant(self) -> float:
        """Energy of the intra-chain bonds when every chain is unanimous."""
        return self.n_logical * (self.chain_length - 1) * self.j_fm

    def expand(self, config) -> np.ndarray:
        """Chain-aligned physical configuration of a logical one."""
        return np.repeat(np.asarray(config, dtype=np.int8), self.chain_length, axis=-1)


def embed(model: SpinModel, j_fm: float = DEFAULT_J_FM) -> Tuple[SpinModel, ChainEmbedding]:
    """ Expand every logical spin into a three-spin ferromagnetic path.
    The lowest-index physical spin of each chain carries all logical bonds and
    each chain member gets a third of the logical field.
    :param model: logical SpinModel
    :param j_fm: intra-chain coupling, negative is ferromagnetic
    :return: physical SpinModel and its ChainEmbedding
    """
    n = model.n_spins
    chains = np.arange(n * CHAIN_LENGTH, dtype=np.int64).reshape(n, CHAIN_LENGTH)
    intra = np.concatenate([chains[:, [0, 1]], chains[:, [1, 2]]])
    carriers = chains[model.edges, 0].reshape(-1, 2)
    edges = np.concatenate([carriers, intra])
    couplings = np.concatenate([model.couplings, np.full(intra.shape[0], float(j_fm))])
    fields = np.repeat(model.fields / CHAIN_LENGTH, CHAIN_LENGTH)
    physical = SpinModel(
        n_spins=n * CHAIN_LENGTH,
        edges=edges,
        couplings=couplings,
        fields=fields,
        J=model.J,
        jprime=model.jprime,
        h=model.h,
    )
    embedding = ChainEmbedding(n_logical=n, j_fm=float(j_fm), chains=chains,
                               bond_carriers=carriers)
    return physical, embedding


def unembed(physical_configs, embedding: ChainEmbedding) -> Tuple[np.ndarray, np.ndarray]:
    """ Majority vote per chain.
    :param physical_configs: (3N,) or (R, 3N) array of +-1
    :param embedding: ChainEmbedding
    :return: logical configs and chain-break count per read
    """
    spins = np.asarray(physical_configs)
    if spins.shape[-1] != embedding.n_physical:
        raise ConfigLengthMismatchException(embedding.n_physical, spins.shape[-1])
    grouped = spins.astype(np.int64)[..., embedding.chains]
    totals = grouped.sum(axis=-1)
    logical = np.where(totals > 0, 1, -1).astype(np.int8)
    breaks = np.count_nonzero(np.abs(totals) != embedding.chain_length, axis=-1)
    return logical, breaks
