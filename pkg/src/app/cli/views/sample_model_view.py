"""Module for SampleModelView class."""

from typing import Dict


class SampleModelView:

    @staticmethod
    def show(data: Dict) -> None:
        for key, value in data.items():
            print(f"{key}: {value}")
