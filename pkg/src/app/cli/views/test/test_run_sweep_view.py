# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring


from src.app.cli.views.run_sweep_view import RunSweepView


def test_run_sweep_view(capsys):
    data = {
        "points": 2,
        "rows": [
            {"jprime": 0.35, "h": 0.0, "mean_abs_m": 0.142857, "stderr": 0.001235},
            {"jprime": 0.6, "h": 0.3, "mean_abs_m": 0.25, "stderr": 0.0},
        ],
        "output_dir": "results",
    }
    view = RunSweepView()
    view.show(data)
    captured = capsys.readouterr()
    assert captured.out.splitlines() == [
        "  jprime      h      <|m|>     stderr",
        "   0.350  0.000   0.142857   0.001235",
        "   0.600  0.300   0.250000   0.000000",
        "2 points written to results",
    ]
