# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring


from src.app.cli.views.structure_factor_view import StructureFactorView


def test_structure_factor_view(capsys):
    data = {"action": "sq", "zone": "hexagonal", "peak_intensity": 12.5}
    view = StructureFactorView()
    view.show(data)
    captured = capsys.readouterr()
    assert captured.out == "action: sq\nzone: hexagonal\npeak_intensity: 12.5\n"
