""" Run configuration: defaults, config file and command-line flags

A config file holds ``key = value`` lines with ``#`` comments. Flags are
``--key value``, ``--key=value`` or bare ``key=value`` tokens and override
the file. Every key is validated by a strict cerberus schema, so unknown
keys, type mismatches and out-of-range values fail naming the key.
"""
import io
from dataclasses import dataclass, fields
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from dotenv import dotenv_values

from src.app.cli.config import Config
from src.domain.entities.anneal_schedule import AnnealSchedule, BetaSchedule
from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.sweep_plan import DEFAULT_FIELDS, DEFAULT_J, DEFAULT_JPRIMES, SweepPlan
from src.domain.observables import MIN_RESOLUTION
from src.domain.value_objects import (BetaScheduleKind, Boundary, EngineName, OutputKind,
                                      Zone)
from src.interactor.errors.error_classes import ConfigurationException
from src.interactor.validations.base_input_validator import BaseInputValidator

TRUE_WORDS = ("true", "yes", "on", "1")
FALSE_WORDS = ("false", "no", "off", "0")


def _float_list(value) -> List[float]:
    """``0.3,0.6,1.0`` or an inclusive ``start:stop:step`` range."""
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    if isinstance(value, (int, float)):
        return [float(value)]
    text = str(value).strip()
    if ":" in text:
        start, stop, step = (float(part) for part in text.split(":"))
        if step <= 0.0:
            raise ValueError("range step must be positive")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        return [float(v) for v in np.round(start + step * np.arange(count), 10)]
    return [float(part) for part in text.split(",") if part.strip()]


def _word_list(value) -> List[str]:
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return [part.strip() for part in str(value).split(",") if part.strip()]


def _boolean(value) -> bool:
    if isinstance(value, bool):
        return value
    word = str(value).strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"'{value}' is not a boolean")


def _positive(field, value, error):
    if value <= 0.0:
        error(field, "must be positive")


SCHEMA = {
    "L": {"type": "integer", "coerce": int, "min": 1},
    "boundary": {"type": "string", "allowed": [str(b) for b in Boundary]},
    "J": {"type": "float", "coerce": float, "check_with": _positive},
    "jprime": {"type": "list", "coerce": _float_list, "minlength": 1, "schema": {"type": "float"}},
    "h": {"type": "list", "coerce": _float_list, "minlength": 1, "schema": {"type": "float"}},
    "engine": {"type": "string", "allowed": [str(e) for e in EngineName]},
    "reads": {"type": "integer", "coerce": int, "min": 1},
    "sweeps": {"type": "integer", "coerce": int, "min": 1},
    "beta_start": {"type": "float", "coerce": float, "check_with": _positive},
    "beta_end": {"type": "float", "coerce": float, "check_with": _positive},
    "beta_kind": {"type": "string", "allowed": [str(k) for k in BetaScheduleKind]},
    "trotter": {"type": "integer", "coerce": int, "min": 2},
    "gamma0": {"type": "float", "coerce": float, "min": 0.0},
    "steps": {"type": "integer", "coerce": int, "min": 1},
    "sqa_beta": {"type": "float", "coerce": float, "check_with": _positive},
    "seed": {"type": "integer", "coerce": int, "min": 0},
    "embed": {"type": "boolean", "coerce": _boolean},
    "j_fm": {"type": "float", "coerce": float, "max": 0.0},
    "randomize": {"type": "boolean", "coerce": _boolean},
    "outputs": {"type": "list", "coerce": _word_list,
                "schema": {"type": "string", "allowed": [str(o) for o in OutputKind]}},
    "zone": {"type": "string", "allowed": [str(z) for z in Zone]},
    "resolution": {"type": "integer", "coerce": int, "min": MIN_RESOLUTION},
    "shear": {"type": "float", "coerce": float, "min": 0.0, "max": 1.0},
    "ground_only": {"type": "boolean", "coerce": _boolean},
    "dump_samples": {"type": "boolean", "coerce": _boolean},
    "output_dir": {"type": "string", "empty": False},
    "workers": {"type": "integer", "coerce": int, "min": 1},
    "verbosity": {"type": "integer", "coerce": int, "min": 0, "max": 2},
    "samples": {"type": "string"},
    "models": {"type": "integer", "coerce": int, "min": 1},
    "config": {"type": "string"},
}

HELP = {
    "L": "unit cells per side",
    "boundary": "corner keeps the border corner sites, edge drops them",
    "J": "coupling of the square (J) bonds",
    "jprime": "diagonal couplings, comma list or start:stop:step; sample uses the first",
    "h": "longitudinal fields, comma list or start:stop:step; sample uses the first",
    "engine": "exact, sa or sqa",
    "reads": "anneal-and-measure cycles per point",
    "sweeps": "Metropolis passes per simulated-annealing read",
    "beta_start": "first inverse temperature of simulated annealing",
    "beta_end": "last inverse temperature of simulated annealing",
    "beta_kind": "geometric or linear inverse-temperature ramp",
    "trotter": "imaginary-time replicas of simulated quantum annealing",
    "gamma0": "initial transverse field",
    "steps": "schedule steps of simulated quantum annealing",
    "sqa_beta": "inverse temperature of simulated quantum annealing",
    "seed": "base seed",
    "embed": "run on three-spin ferromagnetic chains",
    "j_fm": "intra-chain coupling when embedded",
    "randomize": "random site order within a sweep",
    "outputs": "magnetization and/or structure_factor",
    "zone": "square, hexagonal or auto (square below J' = J)",
    "resolution": "S(q) raster points per axis",
    "shear": "0 keeps square positions, 1 gives the kagome geometry",
    "ground_only": "observables over minimum-energy reads only",
    "dump_samples": "write one samples file per point",
    "output_dir": "directory of the result files",
    "workers": "points sampled concurrently",
    "verbosity": "0 warnings, 1 progress, 2 per-point detail",
    "samples": "samples dump read by the sq command",
    "models": "random models of the verify command",
    "config": "key = value file, overridden by flags",
}


@dataclass(frozen=True)
class RunConfig:
    """Every run parameter, validated."""

    L: int = 8
    boundary: str = str(Boundary.CORNER)
    J: float = DEFAULT_J
    jprime: Tuple[float, ...] = DEFAULT_JPRIMES
    h: Tuple[float, ...] = DEFAULT_FIELDS
    engine: str = str(EngineName.SA)
    reads: int = 1000
    sweeps: int = 1000
    beta_start: float = 0.1
    beta_end: float = 10.0
    beta_kind: str = str(BetaScheduleKind.GEOMETRIC)
    trotter: int = 8
    gamma0: float = 3.0
    steps: int = 1000
    sqa_beta: float = 10.0
    seed: int = 1234
    embed: bool = False
    j_fm: float = -2.0
    randomize: bool = False
    outputs: Tuple[str, ...] = (str(OutputKind.MAGNETIZATION), str(OutputKind.STRUCTURE_FACTOR))
    zone: str = str(Zone.AUTO)
    resolution: int = 64
    shear: float = 1.0
    ground_only: bool = False
    dump_samples: bool = False
    output_dir: str = Config.DEFAULT_OUTPUT_DIR
    workers: int = Config.DEFAULT_WORKERS
    verbosity: int = 1
    samples: str = ""
    models: int = 20
    config: str = ""

    def to_engine(self) -> EngineSpec:
        return EngineSpec(
            engine=EngineName(self.engine),
            reads=self.reads,
            sweeps=self.sweeps,
            beta_schedule=BetaSchedule(self.beta_start, self.beta_end, BetaScheduleKind(self.beta_kind)),
            trotter=self.trotter,
            anneal_schedule=AnnealSchedule(gamma0=self.gamma0, steps=self.steps),
            sqa_beta=self.sqa_beta,
            seed=self.seed,
            embed=self.embed,
            j_fm=self.j_fm,
            randomize=self.randomize,
            n_jobs=self.workers,
        )

    def to_plan(self) -> SweepPlan:
        return SweepPlan(
            size=self.L,
            boundary=Boundary(self.boundary),
            J=self.J,
            jprimes=tuple(self.jprime),
            fields=tuple(self.h),
            engine=self.to_engine(),
            outputs=frozenset(OutputKind(kind) for kind in self.outputs),
            zone=Zone(self.zone),
            resolution=self.resolution,
            shear=self.shear,
            ground_only=self.ground_only,
            keep_samples=self.dump_samples,
            workers=self.workers,
        )

    def to_dict(self) -> Dict:
        return {item.name: getattr(self, item.name) for item in fields(self)}


class RunConfigValidator(BaseInputValidator):
    """ Strict validation of raw run parameters
    :param input_data: defaults merged with file and flag values
    """

    def validate(self) -> Dict:
        return super().verify(SCHEMA)

    def _raise_validation_error(self):
        key = sorted(self.errors)[0]
        message = self.errors[key][0]
        if isinstance(message, dict):
            message = "; ".join(f"item {index}: {text[0]}" for index, text in sorted(message.items()))
        raise ConfigurationException(key, str(message))


def parse_flags(flags: Sequence[str]) -> Dict[str, str]:
    """ Raw values of ``--key value``, ``--key=value`` and ``key=value`` tokens.
    A ``--key`` followed by another flag or by nothing reads as ``true``.
    """
    values: Dict[str, str] = {}
    tokens = list(flags)
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if token.startswith("--"):
            key, sep, value = token[2:].partition("=")
            if not sep:
                following = tokens[index + 1] if index + 1 < len(tokens) else None
                if following is None or following.startswith("--") or "=" in following:
                    value = "true"
                else:
                    value = following
                    index += 1
        elif "=" in token:
            key, _, value = token.partition("=")
        else:
            raise ConfigurationException(token, "expected key=value or --key value")
        values[key.strip().replace("-", "_")] = value.strip()
        index += 1
    return values


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf8") as handle:
            return handle.read()
    except OSError as error:
        raise ConfigurationException("config", f"cannot read '{path}': {error.strerror}") from error


def parse_config(text: Optional[str] = None, flags: Optional[Sequence[str]] = None) -> RunConfig:
    """ Validated RunConfig from defaults, a config file text and flags, in rising precedence.
    :param text: config file contents
    :param flags: command-line tokens; a ``config`` flag names a file read before the flags apply
    :return: RunConfig
    :raises ConfigurationException: naming the offending key
    """
    overrides = parse_flags(flags or [])
    raw: Dict = {}
    if text is None and overrides.get("config"):
        text = _read_text(overrides["config"])
    if text:
        raw.update({key: value for key, value in dotenv_values(stream=io.StringIO(text)).items()
                    if value is not None})
    raw.update(overrides)
    document = dict(RunConfig().to_dict(), **raw)
    validated = RunConfigValidator(document).validate()
    validated["jprime"] = tuple(validated["jprime"])
    validated["h"] = tuple(validated["h"])
    validated["outputs"] = tuple(validated["outputs"])
    return RunConfig(**validated)


def help_text() -> str:
    defaults = RunConfig().to_dict()
    lines = ["options (config file key = value, or --key value):"]
    for key, description in HELP.items():
        default = defaults[key]
        if isinstance(default, tuple):
            default = ",".join(f"{v:g}" if isinstance(v, float) else str(v) for v in default)
        lines.append(f"  --{key:<13} {description} (default: {default})")
    return "\n".join(lines)
