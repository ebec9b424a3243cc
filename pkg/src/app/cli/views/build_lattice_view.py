"""Module for BuildLatticeView class."""

from typing import Dict


class BuildLatticeView:

    @staticmethod
    def show(data: Dict) -> None:
        for key, value in data.items():
            print(f"{key}: {value}")
