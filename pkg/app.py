import sys

from src.app.cli.cli_process_handler import CliProcessHandler
from src.app.cli.config import Config
from src.app.cli.controllers.build_lattice_controller import BuildLatticeController
from src.app.cli.controllers.run_sweep_controller import RunSweepController
from src.app.cli.controllers.sample_model_controller import SampleModelController
from src.app.cli.controllers.structure_factor_controller import StructureFactorController
from src.app.cli.controllers.verify_oracle_controller import VerifyOracleController
from src.infrastructure.loggers.logger_default import LoggerDefault
from src.infrastructure.repositories.result_file_repository import ResultFileRepository
from src.infrastructure.samplers.spin_sampler import SpinSampler
from src.infrastructure.services.service_container import ServiceContainer


def main(argv=None) -> int:
    config = Config()
    logger_default = LoggerDefault(config.LOG_DIR, config.LOG_LEVEL)
    sampler = SpinSampler(logger_default)

    service_container = ServiceContainer(logger_default, config, sampler, ResultFileRepository)

    process = CliProcessHandler(service_container)
    process.add_option("lattice", BuildLatticeController(service_container), "dump the lattice file")
    process.add_option("sample", SampleModelController(service_container), "first (J', h) point with samples dump")
    process.add_option("sweep", RunSweepController(service_container), "full (J', h) grid")
    process.add_option("sq", StructureFactorController(service_container), "S(q) of an existing samples dump")
    process.add_option("verify", VerifyOracleController(service_container), "oracle suite, exact vs sa/sqa")
    return process.execute(argv)


if __name__ == "__main__":
    sys.exit(main())
