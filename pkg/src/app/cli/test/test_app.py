# pylint: disable=missing-module-docstring
# pylint: disable=missing-class-docstring
# pylint: disable=missing-function-docstring
import app

SWEEP_FLAGS = ["--L", "2", "--jprime", "0.35,1.0", "--h", "0,0.3", "--reads", "10", "--sweeps", "30",
               "--seed", "5", "--resolution", "16", "--verbosity", "0"]


def _outputs(directory):
    return {path.name: path.read_bytes() for path in sorted(directory.iterdir())
            if path.suffix in (".csv", ".pgm", ".meta")}


def test_sweep_is_byte_identical(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)

    assert app.main(["sweep", *SWEEP_FLAGS, "--output_dir", "first"]) == 0
    assert app.main(["sweep", *SWEEP_FLAGS, "--output_dir", "second", "--workers", "2"]) == 0

    first = _outputs(tmp_path / "first")
    assert len(first) == 2 + 2 * 4
    assert first == _outputs(tmp_path / "second")


def test_lattice_command(monkeypatch, tmp_path, capsys):
    monkeypatch.chdir(tmp_path)

    assert app.main(["lattice", "--L", "8", "--output_dir", "lattice"]) == 0

    assert "sites: 225" in capsys.readouterr().out
    assert (tmp_path / "lattice" / "lattice.txt").exists()


def test_sample_then_sq(monkeypatch, tmp_path, capsys):
    monkeypatch.chdir(tmp_path)

    assert app.main(["sample", "--L", "1", "--jprime", "0", "--engine", "exact", "--resolution", "16",
                     "--output_dir", "point"]) == 0
    dumps = sorted((tmp_path / "point").glob("samples_*.txt"))
    assert len(dumps) == 1
    assert app.main(["sq", "--samples", str(dumps[0]), "--zone", "square", "--resolution", "16",
                     "--output_dir", "maps"]) == 0

    out = capsys.readouterr().out
    assert "action: sq" in out
    assert (tmp_path / "maps" / "manifest.txt").exists()


def test_usage_error_exit_code(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)

    assert app.main([]) == 2
    assert app.main(["teleport"]) == 2
    assert app.main(["lattice", "--L", "-1"]) == 1
