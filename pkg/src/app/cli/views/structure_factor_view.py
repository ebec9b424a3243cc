"""Module for StructureFactorView class."""

from typing import Dict


class StructureFactorView:

    @staticmethod
    def show(data: Dict) -> None:
        for key, value in data.items():
            print(f"{key}: {value}")
