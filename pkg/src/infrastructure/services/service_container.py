from typing import Callable

from src.app.cli.config import Config
from src.interactor.interfaces.logger.logger import LoggerInterface
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface
from src.interactor.interfaces.samplers.sampler import SamplerInterface


class ServiceContainer:
    """Shared services of the controllers; repositories are opened per output directory."""

    def __init__(self, logger: LoggerInterface, config: Config, sampler: SamplerInterface,
                 repository_factory: Callable[[str], ResultRepositoryInterface]):
        self.logger = logger
        self.config = config
        self.sampler = sampler
        self.repository_factory = repository_factory

    def repository(self, output_dir: str) -> ResultRepositoryInterface:
        return self.repository_factory(output_dir)
