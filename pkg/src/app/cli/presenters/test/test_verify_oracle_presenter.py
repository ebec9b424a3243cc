# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring


from src.app.cli.presenters.verify_oracle_presenter import VerifyOraclePresenter
from src.interactor.dtos.verify_oracle_dtos import VerifyOracleOutputDto


def test_verify_oracle_presenter():
    checks = {"triangle_ground_energy": True, "embedded_chain_breaks": True}
    output_dto = VerifyOracleOutputDto(models=20, sa_hits=20, sqa_hits=19, checks=checks)
    presenter = VerifyOraclePresenter()
    assert presenter.present(output_dto) == {
        "action": "verify",
        "models": 20,
        "sa_rate": 1.0,
        "sqa_rate": 0.95,
        "checks": checks,
        "passed": True,
    }
