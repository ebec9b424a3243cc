""" Module for the StructureFactorPresenter
"""

from typing import Dict

from src.interactor.dtos.structure_factor_dtos import StructureFactorOutputDto
from src.interactor.interfaces.presenters.structure_factor_presenter import \
    StructureFactorPresenterInterface


class StructureFactorPresenter(StructureFactorPresenterInterface):
    """ Class for the StructureFactorPresenter
    """

    def present(self, output_dto: StructureFactorOutputDto) -> Dict:
        """ Present S(q) of a samples dump
        :param output_dto: StructureFactorOutputDto
        :return: Dict
        """
        return {
            "action": "sq",
            "jprime": output_dto.jprime,
            "h": output_dto.h,
            "zone": str(output_dto.grid.zone),
            "resolution": output_dto.grid.resolution,
            "reads": output_dto.grid.reads,
            "peak_qx": round(output_dto.peak["qx"], 6),
            "peak_qy": round(output_dto.peak["qy"], 6),
            "peak_intensity": round(output_dto.peak["intensity"], 6),
            "contrast": round(output_dto.peak["contrast"], 3),
            "output_dir": output_dto.output_dir,
            "files": output_dto.files,
        }
