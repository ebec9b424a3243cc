""" Module for the RunSweepPresenter
"""

from typing import Dict

from src.interactor.dtos.plan_dtos import RunSweepOutputDto
from src.interactor.interfaces.presenters.run_sweep_presenter import RunSweepPresenterInterface


class RunSweepPresenter(RunSweepPresenterInterface):
    """ Class for the RunSweepPresenter
    """

    def present(self, output_dto: RunSweepOutputDto) -> Dict:
        """ Present a parameter sweep
        :param output_dto: RunSweepOutputDto
        :return: Dict
        """
        rows = [
            {
                "jprime": row.jprime,
                "h": row.h,
                "mean_abs_m": round(row.magnetization.mean, 6),
                "stderr": round(row.magnetization.stderr, 6),
            }
            for row in output_dto.result.rows()
        ]
        return {
            "action": "sweep",
            "points": len(rows),
            "rows": rows,
            "output_dir": output_dto.output_dir,
            "files": output_dto.files,
        }
