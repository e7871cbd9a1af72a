"""
Experiment configuration: flags merged over an optional `key = value` file
"""
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Literal, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.exceptions import ConfigError
from src.montecarlo.schemes import SCHEMES
from src.settings import APP_SETTINGS
from src.utils.validator import ExperimentValidator

CURVES = ("thm1", "thm2", "cor1", "zf_tdma_w", "zf_tdma_g", "zf_mat_g", "outer", "cutset", "finite_n")
SUITES = ("all", "alignment", "decode", "partition", "regions", "ls", "pilot", "coherence")

_INT_KEYS = {"K", "Nt", "n", "Tn", "Tf", "Tfb", "Tc", "trials", "seed", "workers"}


class ExperimentConfig(BaseModel):
    command: Literal["region", "simulate", "verify"]
    K: int = Field(default=3, ge=3)
    scheme: Optional[str] = None
    curve: Optional[str] = None
    Nt: Optional[int] = Field(default=None, ge=1)
    n: int = Field(default=1, ge=1)
    Tn: Optional[int] = Field(default=None, ge=0)
    Tf: Optional[int] = Field(default=None, ge=0)
    Tfb: Optional[int] = Field(default=None, ge=0)
    Tc: Optional[int] = Field(default=None, ge=1)
    snr: List[float] = Field(default_factory=lambda: list(APP_SETTINGS.SNR_GRID_DB))
    trials: int = Field(default_factory=lambda: APP_SETTINGS.TRIALS)
    seed: int = Field(default_factory=lambda: APP_SETTINGS.SEED, ge=0)
    out: Optional[Path] = None
    format: Optional[Literal["csv", "json"]] = None
    grid: Fraction = Fraction(1, 100)
    xmax: Fraction = Fraction(2)
    suite: str = "all"
    workers: int = Field(default_factory=lambda: APP_SETTINGS.MAX_WORKERS, ge=1)
    timestamp: bool = True

    model_config = {"arbitrary_types_allowed": True}

    @field_validator("grid", "xmax", mode="before")
    @classmethod
    def parse_fraction(cls, value):
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {value!r}")

    @model_validator(mode="after")
    def default_format(self):
        # estimates are JSON documents, curves are CSV tables
        if self.format is None:
            self.format = "json" if self.command == "simulate" else "csv"
        return self

    @field_validator("scheme")
    @classmethod
    def known_scheme(cls, value):
        if value is not None and value not in SCHEMES:
            raise ValueError(f"unknown scheme {value!r}")
        return value

    @field_validator("curve")
    @classmethod
    def known_curve(cls, value):
        if value is not None and value not in CURVES:
            raise ValueError(f"unknown curve {value!r}")
        return value

    @field_validator("suite")
    @classmethod
    def known_suite(cls, value):
        if value not in SUITES:
            raise ValueError(f"unknown suite {value!r}")
        return value

    @property
    def feedback_params(self) -> Dict[str, Optional[int]]:
        return {"Tn": self.Tn, "Tf": self.Tf, "Tfb": self.Tfb, "Tc": self.Tc}

    def check(self):
        """Cross-field checks that depend on the command"""
        errors: List[str] = []
        if self.command == "region":
            if self.curve is None:
                errors.append("region needs --curve")
            if self.grid <= 0:
                errors.append("--grid must be positive")
        elif self.command == "simulate":
            if self.scheme is None:
                errors.append("simulate needs --scheme")
            for problems in ExperimentValidator.validate_experiment(
                {"K": self.K, "snr_db": self.snr, "trials": self.trials, **self.feedback_params}
            ).values():
                errors.extend(problems)
        if errors:
            raise ConfigError("; ".join(errors))
        return self


def _coerce(key: str, raw: str):
    if key in _INT_KEYS:
        return int(raw)
    if key == "snr":
        return [float(v) for v in raw.replace(",", " ").split()]
    if key == "timestamp":
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return raw


def read_config_file(path: Path) -> Dict[str, object]:
    """`key = value` lines; keys are flag names without leading dashes"""
    if not Path(path).is_file():
        raise ConfigError(f"config file {path} not found")
    values = {}
    for key, raw in dotenv_values(path).items():
        if raw is None:
            continue
        key = key.strip().lstrip("-").replace("-", "_")
        if key == "no_timestamp":
            key, raw = "timestamp", str(raw.strip().lower() not in ("1", "true", "yes", "on"))
        try:
            values[key] = _coerce(key, raw)
        except ValueError:
            raise ConfigError(f"config file {path}: bad value for {key}: {raw!r}")
    return values


def build_config(command: str, flags: Dict[str, object], config_file: Optional[Path] = None) -> ExperimentConfig:
    """Flags given on the command line win over the config file"""
    merged = read_config_file(config_file) if config_file else {}
    merged.update({k: v for k, v in flags.items() if v is not None})
    merged["command"] = command
    try:
        config = ExperimentConfig(**merged)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(details)
    return config.check()
