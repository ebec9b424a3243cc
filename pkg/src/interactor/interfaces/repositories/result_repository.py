""" This module contains the interface for the ResultRepository
"""
from abc import ABC, abstractmethod
from typing import Dict, List

from src.domain.entities.lattice import Lattice
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.sq_grid import SqGrid
from src.domain.entities.sweep_plan import PointResult, SweepResult


class ResultRepositoryInterface(ABC):
    """ Storage of run artifacts in one output directory
    """

    @abstractmethod
    def write_lattice(self, lattice: Lattice) -> str:
        """ Write the lattice dump
        :return: file name
        """

    @abstractmethod
    def write_magnetization(self, rows: List[PointResult]) -> str:
        """ Write the magnetization table, one row per point in the given order
        :return: file name
        """

    @abstractmethod
    def write_observables(self, rows: List[PointResult]) -> str:
        """ Write the wide per-point table (staggered order, energies, chain breaks, Bragg peak)
        :return: file name
        """

    @abstractmethod
    def write_structure_factor(self, jprime: float, h: float, grid: SqGrid) -> List[str]:
        """ Write the S(q) heatmap and its sidecar
        :return: file names
        """

    @abstractmethod
    def write_samples(self, samples: SampleSet, jprime: float, h: float) -> str:
        """ Write a samples dump
        :return: file name
        """

    @abstractmethod
    def read_samples(self, path: str) -> SampleSet:
        """ Read a samples dump back into a SampleSet of its lattice model
        """

    @abstractmethod
    def write_provenance(self, provenance: Dict) -> str:
        """ Write the provenance block
        :return: file name
        """

    @abstractmethod
    def write_manifest(self) -> str:
        """ Hash every file written so far
        :return: file name
        """

    @abstractmethod
    def verify_manifest(self) -> List[str]:
        """ Re-hash the files listed in the manifest
        :return: names of files whose hash no longer matches
        """

    @abstractmethod
    def write_outputs(self, result: SweepResult, dump_samples: bool = False) -> List[str]:
        """ Write every artifact of a sweep and its manifest
        :return: file names, manifest last
        """
