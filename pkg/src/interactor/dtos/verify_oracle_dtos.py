""" Module for VerifyOracle Dtos
"""

from dataclasses import dataclass, asdict, field
from typing import Dict, List


@dataclass
class VerifyOracleInputDto:
    """ Data Transfer Object for the oracle suite"""
    models: int = 20
    seed: int = 1234
    max_spins: int = 20
    sa_reads: int = 200
    sa_sweeps: int = 500
    sqa_reads: int = 50
    trotter: int = 8
    sa_threshold: float = 0.95
    sqa_threshold: float = 0.90

    def to_dict(self):
        """ Convert data into dictionary
        """
        return asdict(self)


@dataclass
class VerifyOracleOutputDto:
    """ Data Transfer Object for the oracle suite"""
    models: int
    sa_hits: int
    sqa_hits: int
    checks: Dict[str, bool]
    failures: List[str] = field(default_factory=list)

    @property
    def sa_rate(self) -> float:
        return self.sa_hits / self.models

    @property
    def sqa_rate(self) -> float:
        return self.sqa_hits / self.models
