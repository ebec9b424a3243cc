""" Module for the SampleModelPresenter
"""

from typing import Dict

from src.domain.observables import bragg_peak
from src.interactor.dtos.plan_dtos import SampleModelOutputDto
from src.interactor.interfaces.presenters.sample_model_presenter import SampleModelPresenterInterface


class SampleModelPresenter(SampleModelPresenterInterface):
    """ Class for the SampleModelPresenter
    """

    def present(self, output_dto: SampleModelOutputDto) -> Dict:
        """ Present a single-point run
        :param output_dto: SampleModelOutputDto
        :return: Dict
        """
        point = output_dto.point
        response = {
            "action": "sample",
            "jprime": point.jprime,
            "h": point.h,
            "seed": point.seed,
            "mean_abs_m": round(point.magnetization.mean, 6),
            "stderr": round(point.magnetization.stderr, 6),
            "reads": point.magnetization.reads,
            "mean_abs_ms": round(point.staggered.mean, 6),
            "min_energy": round(point.min_energy, 9),
            "neel_magnetization": round(output_dto.neel_magnetization, 6),
        }
        if point.chain_break_rate is not None:
            response["chain_break_rate"] = round(point.chain_break_rate, 6)
        if point.structure_factor is not None:
            peak = bragg_peak(point.structure_factor)
            response["peak"] = {key: round(value, 6) for key, value in peak.items()}
        response["output_dir"] = output_dto.output_dir
        response["files"] = output_dto.files
        return response
