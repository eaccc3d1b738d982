"""Flat key-value experiment configuration with lossless text round-trip.

Precedence is: command-line flags > config file > defaults. The file
format is one `key = value` per line, # comments allowed. Values are
written with repr so floats survive a round-trip bit-exactly.
"""

import dataclasses
from dataclasses import dataclass

from .errors import ConfigError

PIPELINES = ("fourier", "fourier+lrd", "locf", "hy")


@dataclass
class ExperimentConfig:
    """Every knob the CLI exposes, validated before any work starts."""

    seed: int = 0
    trials: int = 1
    n_obs_x: int = 1000
    n_obs_y: int = 1000
    span: float = 1.0
    fine_exponent: int = 17
    hurst: float = 0.5
    rho: float = 0.9
    tau: float = 0.0
    kernel_alpha: float = 0.0
    kernel_beta: float = 0.0
    noise_scale: float = 1.0
    projections: int = 1000
    delta_f: float = 0.0  # 0 means 2*pi / joint span
    delta_h: float = 0.0  # 0 means span / projections
    half_count: int = 10
    pipeline: str = "fourier"
    workers: int = 1
    theta: float = 0.2
    smooth: int = 0
    low_fraction: float = 0.1

    def validate(self):
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.n_obs_x < 2 or self.n_obs_y < 2:
            raise ConfigError("n_obs_x and n_obs_y must be >= 2")
        if not (self.span > 0):
            raise ConfigError(f"span must be positive, got {self.span}")
        if not (2 <= self.fine_exponent <= 26):
            raise ConfigError(
                f"fine_exponent must be in [2, 26], got {self.fine_exponent}"
            )
        if (1 << self.fine_exponent) < max(self.n_obs_x, self.n_obs_y):
            raise ConfigError("fine grid must be at least as long as n_obs")
        if not (0.0 < self.hurst < 1.0):
            raise ConfigError(f"hurst must be in (0, 1), got {self.hurst}")
        if not (-1.0 <= self.rho <= 1.0):
            raise ConfigError(f"rho must be in [-1, 1], got {self.rho}")
        if self.tau < 0:
            raise ConfigError(f"tau must be >= 0, got {self.tau}")
        if self.kernel_beta < 0:
            raise ConfigError(f"kernel_beta must be >= 0, got {self.kernel_beta}")
        if self.noise_scale < 0:
            raise ConfigError(f"noise_scale must be >= 0, got {self.noise_scale}")
        if self.projections < 2:
            raise ConfigError(
                f"projections must be >= 2, got {self.projections}"
            )
        if self.delta_f < 0:
            raise ConfigError(f"delta_f must be >= 0, got {self.delta_f}")
        if self.delta_h < 0:
            raise ConfigError(f"delta_h must be >= 0, got {self.delta_h}")
        if self.half_count < 1:
            raise ConfigError(f"half_count must be >= 1, got {self.half_count}")
        if self.pipeline not in PIPELINES:
            raise ConfigError(
                f"pipeline must be one of {', '.join(PIPELINES)}, "
                f"got {self.pipeline!r}"
            )
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.theta < 0:
            raise ConfigError(f"theta must be >= 0, got {self.theta}")
        if self.smooth < 0:
            raise ConfigError(f"smooth must be >= 0, got {self.smooth}")
        if not (0.0 < self.low_fraction <= 0.5):
            raise ConfigError(
                f"low_fraction must be in (0, 0.5], got {self.low_fraction}"
            )
        return self

    def resolved_delta_h(self):
        return self.delta_h if self.delta_h > 0 else self.span / self.projections

    def to_text(self):
        lines = []
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            text = repr(value) if isinstance(value, float) else str(value)
            lines.append(f"{field.name} = {text}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        fields = {f.name: f.type for f in dataclasses.fields(cls)}
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"config line {lineno}: expected key = value")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key not in fields:
                raise ConfigError(f"config line {lineno}: unknown key {key!r}")
            try:
                if fields[key] == "int" or fields[key] is int:
                    values[key] = int(val)
                elif fields[key] == "float" or fields[key] is float:
                    values[key] = float(val)
                else:
                    values[key] = val
            except ValueError:
                raise ConfigError(
                    f"config line {lineno}: cannot parse {val!r} for {key}"
                ) from None
        return cls(**values)

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_text(fh.read())
