"""Module for RunSweepView class."""

from typing import Dict


class RunSweepView:

    @staticmethod
    def show(data: Dict) -> None:
        print(f"{'jprime':>8} {'h':>6} {'<|m|>':>10} {'stderr':>10}")
        for row in data["rows"]:
            print(f"{row['jprime']:>8.3f} {row['h']:>6.3f} {row['mean_abs_m']:>10.6f} {row['stderr']:>10.6f}")
        print(f"{data['points']} points written to {data['output_dir']}")
