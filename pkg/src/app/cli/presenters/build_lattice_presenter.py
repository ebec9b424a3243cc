""" Module for the BuildLatticePresenter
"""

from typing import Dict

from src.domain.value_objects import SiteRole
from src.interactor.dtos.build_lattice_dtos import BuildLatticeOutputDto
from src.interactor.interfaces.presenters.build_lattice_presenter import BuildLatticePresenterInterface


class BuildLatticePresenter(BuildLatticePresenterInterface):
    """ Class for the BuildLatticePresenter
    """

    def present(self, output_dto: BuildLatticeOutputDto) -> Dict:
        """ Present the lattice dump
        :param output_dto: BuildLatticeOutputDto
        :return: Dict
        """
        lattice = output_dto.lattice
        counts = lattice.role_counts()
        return {
            "action": "lattice",
            "L": lattice.size,
            "boundary": str(lattice.boundary),
            "sites": lattice.n_sites,
            "bonds": lattice.n_bonds,
            "corner_sites": counts[SiteRole.CORNER],
            "edge_sites": counts[SiteRole.EDGE_H] + counts[SiteRole.EDGE_V],
            "neel_magnetization": round(lattice.neel_magnetization(), 6),
            "output_dir": output_dto.output_dir,
            "files": output_dto.files,
        }
