""" Module for ResultFileRepository
"""
import csv
import hashlib
import json
import os
from typing import Dict, List, Optional

import numpy as np
from PIL import Image

from src.domain.entities.lattice import Lattice, build_lattice
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.spin_model import SpinModel
from src.domain.entities.sq_grid import SqGrid
from src.domain.entities.sweep_plan import PointResult, SweepResult
from src.domain.observables import bragg_peak
from src.domain.value_objects import Boundary, OutputKind
from src.interactor.errors.error_classes import (FieldValueNotPermittedException, OutputWriteException,
                                                 SampleDumpFormatException)
from src.interactor.interfaces.repositories.result_repository import ResultRepositoryInterface

MAGNETIZATION_FILE = "magnetization.csv"
OBSERVABLES_FILE = "observables.csv"
LATTICE_FILE = "lattice.txt"
PROVENANCE_FILE = "provenance.json"
MANIFEST_FILE = "manifest.txt"
PGM_MAXVAL = 65535
SPIN_CHARS = {1: "+", -1: "-"}


def point_label(jprime: float, h: float) -> str:
    return f"{jprime:.3f}_{h:.3f}"


def _number(value: Optional[float]) -> str:
    if value is None:
        return ""
    return f"{value:.10f}"


def heatmap_pixels(grid: SqGrid) -> np.ndarray:
    """Intensities mapped linearly onto 0..65535, the maximum at full scale."""
    peak = grid.max_intensity
    if peak <= 0.0:
        return np.zeros(grid.intensities.shape, dtype=np.uint16)
    return np.rint(grid.intensities / peak * PGM_MAXVAL).astype(np.uint16)


def sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


class ResultFileRepository(ResultRepositoryInterface):
    """ Writes run artifacts under one directory and remembers them for the manifest
    """

    def __init__(self, output_dir: str) -> None:
        self.output_dir = output_dir
        self._written: List[str] = []

    @property
    def written(self) -> List[str]:
        return list(self._written)

    def _path(self, name: str) -> str:
        return os.path.join(self.output_dir, name)

    def _write_text(self, name: str, text: str) -> str:
        path = self._path(name)
        try:
            os.makedirs(self.output_dir, exist_ok=True)
            with open(path, "w", encoding="utf8", newline="\n") as handle:
                handle.write(text)
        except OSError as error:
            raise OutputWriteException(path, error) from error
        self._remember(name)
        return name

    def _remember(self, name: str) -> None:
        if name not in self._written:
            self._written.append(name)

    def write_lattice(self, lattice: Lattice) -> str:
        return self._write_text(LATTICE_FILE, "\n".join(lattice.to_dump_lines()) + "\n")

    def _write_csv(self, name: str, header: List[str], rows: List[List[str]]) -> str:
        path = self._path(name)
        try:
            os.makedirs(self.output_dir, exist_ok=True)
            with open(path, "w", encoding="utf8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(header)
                writer.writerows(rows)
        except OSError as error:
            raise OutputWriteException(path, error) from error
        self._remember(name)
        return name

    def write_magnetization(self, rows: List[PointResult]) -> str:
        return self._write_csv(
            MAGNETIZATION_FILE,
            ["jprime", "h", "mean_abs_m", "stderr", "reads"],
            [[f"{row.jprime:.12g}", f"{row.h:.12g}", _number(row.magnetization.mean),
              _number(row.magnetization.stderr), str(row.magnetization.reads)] for row in rows],
        )

    def write_observables(self, rows: List[PointResult]) -> str:
        table = []
        for row in rows:
            peak = bragg_peak(row.structure_factor) if row.structure_factor is not None else None
            table.append([
                f"{row.jprime:.12g}", f"{row.h:.12g}",
                _number(row.magnetization.mean), _number(row.magnetization.stderr),
                _number(row.staggered.mean), _number(row.staggered.stderr),
                _number(row.min_energy), _number(row.chain_break_rate),
                "" if peak is None else str(row.structure_factor.zone),
                "" if peak is None else _number(peak["qx"]),
                "" if peak is None else _number(peak["qy"]),
                "" if peak is None else _number(peak["intensity"]),
            ])
        return self._write_csv(
            OBSERVABLES_FILE,
            ["jprime", "h", "mean_abs_m", "stderr", "mean_abs_ms", "ms_stderr", "min_energy",
             "chain_break_rate", "zone", "peak_qx", "peak_qy", "peak_intensity"],
            table,
        )

    def write_structure_factor(self, jprime: float, h: float, grid: SqGrid) -> List[str]:
        stem = f"sq_{point_label(jprime, h)}"
        image_name = f"{stem}.pgm"
        path = self._path(image_name)
        try:
            os.makedirs(self.output_dir, exist_ok=True)
            # mode I is written as 16-bit big-endian P5, maxval 65535
            Image.fromarray(heatmap_pixels(grid).astype(np.int32)).save(path, format="PPM")
        except OSError as error:
            raise OutputWriteException(path, error) from error
        self._remember(image_name)
        meta = dict(grid.to_meta(), jprime=f"{jprime:.12g}", h=f"{h:.12g}", maxval=PGM_MAXVAL)
        meta_name = self._write_text(f"{stem}.meta",
                                     "".join(f"{key}={value}\n" for key, value in meta.items()))
        return [image_name, meta_name]

    def write_samples(self, samples: SampleSet, jprime: float, h: float) -> str:
        model = samples.model
        if model.lattice is None:
            raise SampleDumpFormatException("only lattice models can be dumped")
        header = {
            "L": model.lattice.size,
            "boundary": str(model.lattice.boundary),
            "sites": model.n_spins,
            "reads": samples.reads,
            "J": repr(float(model.J)),
            "jprime": repr(float(model.jprime)),
            "h": repr(float(model.h)),
            "engine": samples.info.get("engine", ""),
        }
        lines = [f"# {key}={value}" for key, value in header.items()]
        lines.extend("".join(SPIN_CHARS[int(s)] for s in config) for config in samples.configs)
        return self._write_text(f"samples_{point_label(jprime, h)}.txt", "\n".join(lines) + "\n")

    def read_samples(self, path: str) -> SampleSet:
        try:
            with open(path, "r", encoding="utf8") as handle:
                lines = [line.strip() for line in handle if line.strip()]
        except OSError as error:
            raise SampleDumpFormatException(f"cannot read '{path}': {error}") from error
        header: Dict[str, str] = {}
        rows = []
        for line in lines:
            if line.startswith("#"):
                key, _, value = line.lstrip("# ").partition("=")
                header[key.strip()] = value.strip()
            else:
                rows.append(line)
        missing = [key for key in ("L", "boundary", "J", "jprime", "h") if key not in header]
        if missing:
            raise SampleDumpFormatException(f"header misses {', '.join(missing)}")
        if not rows:
            raise SampleDumpFormatException("no reads")
        try:
            lattice = build_lattice(int(header["L"]), Boundary(header["boundary"]))
            model = SpinModel.from_lattice(lattice, float(header["J"]), float(header["jprime"]),
                                           float(header["h"]))
        except (ValueError, FieldValueNotPermittedException) as error:
            raise SampleDumpFormatException(str(error)) from error
        for number, row in enumerate(rows, start=1):
            if len(row) != lattice.n_sites or set(row) - set(SPIN_CHARS.values()):
                raise SampleDumpFormatException(
                    f"read {number} is not a {lattice.n_sites}-character +/- string")
        configs = np.array([[1 if char == "+" else -1 for char in row] for row in rows],
                           dtype=np.int8)
        return SampleSet(model=model, configs=configs,
                         seeds=np.zeros(configs.shape[0], dtype=np.uint64),
                         info={"engine": header.get("engine", ""), "source": path})

    def write_provenance(self, provenance: Dict) -> str:
        return self._write_text(PROVENANCE_FILE, json.dumps(provenance, indent=2, sort_keys=True) + "\n")

    def write_manifest(self) -> str:
        names = sorted(name for name in self._written if name != MANIFEST_FILE)
        lines = [f"{sha256_file(self._path(name))}  {name}" for name in names]
        return self._write_text(MANIFEST_FILE, "\n".join(lines) + "\n")

    def verify_manifest(self) -> List[str]:
        mismatched = []
        with open(self._path(MANIFEST_FILE), "r", encoding="utf8") as handle:
            for line in handle:
                if not line.strip():
                    continue
                digest, _, name = line.rstrip("\n").partition("  ")
                if not os.path.exists(self._path(name)) or sha256_file(self._path(name)) != digest:
                    mismatched.append(name)
        return mismatched

    def write_outputs(self, result: SweepResult, dump_samples: bool = False) -> List[str]:
        rows = result.rows()
        names = []
        if OutputKind.MAGNETIZATION in result.plan.outputs:
            names.append(self.write_magnetization(rows))
        names.append(self.write_observables(rows))
        for row in rows:
            if row.structure_factor is not None:
                names.extend(self.write_structure_factor(row.jprime, row.h, row.structure_factor))
            if dump_samples and row.samples is not None:
                names.append(self.write_samples(row.samples, row.jprime, row.h))
        names.append(self.write_provenance(result.provenance))
        names.append(self.write_manifest())
        return names
