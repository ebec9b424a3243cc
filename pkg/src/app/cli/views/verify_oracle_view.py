"""Module for VerifyOracleView class."""

from typing import Dict


class VerifyOracleView:

    @staticmethod
    def show(data: Dict) -> None:
        print(f"models: {data['models']}")
        print(f"sa hit rate: {data['sa_rate']}")
        print(f"sqa hit rate: {data['sqa_rate']}")
        for name, passed in data["checks"].items():
            print(f"{name}: {'ok' if passed else 'FAILED'}")
        print("passed" if data["passed"] else "failed")
