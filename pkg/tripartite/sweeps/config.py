# sweeps/config.py
"""
Sweep configuration: one axis over a base parameter point.

Configuration files are flat ``key=value`` text. Frequencies are given in Hz
and converted to rad/s when the grid point is built.
"""

import dataclasses
import logging
from dataclasses import dataclass
from pathlib import Path

import environ
import numpy as np

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import ConfigError
from tripartite.core.frames import DEFAULT_CRITICAL_TOLERANCE
from tripartite.core.hierarchy import DEFAULT_HIERARCHY_FACTOR
from tripartite.core.parameters import SystemParameters

logger = logging.getLogger(__name__)

GAP_RATIO = "gap_ratio"
PARAMETER_FIELDS = tuple(f.name for f in dataclasses.fields(SystemParameters))
AXIS_PARAMETERS = (*PARAMETER_FIELDS, GAP_RATIO)
# keys a configuration file may carry besides parameter values
SETTING_KEYS = (
    "preset",
    "axis",
    "outputs",
    "mode",
    "fock_n",
    "gamma_ad",
    "zeta",
    "coherent_order",
    "hierarchy_factor",
    "critical_tolerance",
    "null_tolerance",
)


@dataclass(frozen=True)
class Axis:
    param: str
    lo: float
    hi: float
    n: int
    log: bool = False

    def __post_init__(self):
        if self.param not in AXIS_PARAMETERS:
            raise ConfigError(
                f"Unknown axis parameter {self.param!r}",
                {"axis": [f"choose one of {', '.join(AXIS_PARAMETERS)}"]},
            )
        if self.n < 2:
            raise ConfigError("An axis needs at least two points", {"axis": [f"n = {self.n}"]})
        if self.lo == self.hi:
            raise ConfigError("Empty axis: both endpoints are equal", {"axis": [str(self.lo)]})
        if self.log and (self.lo <= 0 or self.hi <= 0):
            raise ConfigError("A log axis needs positive endpoints", {"axis": [str(self)]})
        if self.param == GAP_RATIO and min(self.lo, self.hi) <= 0:
            raise ConfigError("Δ/κ_b² must stay positive along the axis", {"axis": [str(self)]})

    @classmethod
    def parse(cls, text: str):
        """``param:lo:hi:n[:log]``."""
        parts = text.strip().split(":")
        if len(parts) not in (4, 5) or (len(parts) == 5 and parts[4] not in ("log", "lin")):
            raise ConfigError(
                f"Malformed axis {text!r}",
                {"axis": ["expected param:lo:hi:n[:log]"]},
            )
        try:
            lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
        except ValueError as e:
            raise ConfigError(f"Malformed axis {text!r}", {"axis": [str(e)]}) from e
        return cls(parts[0], lo, hi, n, log=len(parts) == 5 and parts[4] == "log")

    def values(self) -> np.ndarray:
        if self.log:
            return np.geomspace(self.lo, self.hi, self.n)
        return np.linspace(self.lo, self.hi, self.n)

    def __str__(self):
        text = f"{self.param}:{self.lo!r}:{self.hi!r}:{self.n}"
        return f"{text}:log" if self.log else text


@dataclass(frozen=True)
class SweepConfig:
    """
    Everything a sweep depends on.

    ``values`` holds the base point in Hz (preset merged with overrides);
    ``to_text`` is the round-trip source for ``--dump-config``.
    """

    values: dict
    axis: Axis
    outputs: tuple[str, ...]
    mode: FormulaMode = FormulaMode.CORRECTED
    preset: str = ""
    fock_n: int = 0
    gamma_ad: float = 1e-2
    zeta: float = 1e-3
    coherent_order: int = 1
    hierarchy_factor: float = DEFAULT_HIERARCHY_FACTOR
    critical_tolerance: float = DEFAULT_CRITICAL_TOLERANCE
    null_tolerance: float = 1e-12

    def point(self, value: float) -> SystemParameters:
        """Base point with the axis parameter set to ``value``; λ is left for gap axes."""
        values = dict(self.values)
        if self.axis.param != GAP_RATIO:
            values[self.axis.param] = value
        return SystemParameters.from_hz(**values)

    def with_mode(self, mode):
        return dataclasses.replace(self, mode=FormulaMode(mode))

    def as_dict(self) -> dict:
        """Plain values, safe for pickling and task serialisation."""
        return {
            **self.values,
            "preset": self.preset,
            "axis": str(self.axis),
            "outputs": ",".join(self.outputs),
            "mode": str(self.mode),
            "fock_n": self.fock_n,
            "gamma_ad": self.gamma_ad,
            "zeta": self.zeta,
            "coherent_order": self.coherent_order,
            "hierarchy_factor": self.hierarchy_factor,
            "critical_tolerance": self.critical_tolerance,
            "null_tolerance": self.null_tolerance,
        }

    @classmethod
    def from_dict(cls, data: dict):
        from .forms import SweepConfigForm

        return SweepConfigForm.build(data)

    def to_text(self) -> str:
        return "".join(f"{key}={value}\n" for key, value in self.as_dict().items())


def _scan_lines(path: Path):
    """Line-level diagnostics the dotenv reader would skip silently."""
    errors = {}
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, _ = stripped.partition("=")
        if not sep or not key.strip().isidentifier():
            errors[f"line {number}"] = [f"expected key=value, got {stripped!r}"]
        elif key.strip() not in PARAMETER_FIELDS and key.strip() not in SETTING_KEYS:
            errors[f"line {number}"] = [f"unknown key {key.strip()!r}"]
    if errors:
        raise ConfigError(f"Invalid configuration file {path}", errors)


def read_config_file(path) -> dict:
    """Parse a flat key=value file into a private mapping."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Configuration file {path} not found", {"config": [str(path)]})
    _scan_lines(path)

    class ConfigFile(environ.Env):
        ENVIRON: dict = {}

    ConfigFile.read_env(str(path), overwrite=True)
    return dict(ConfigFile.ENVIRON)


def parse_overrides(pairs) -> dict:
    """``--set key=value`` pairs."""
    overrides = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ConfigError(f"Malformed override {pair!r}", {"set": ["expected key=value"]})
        overrides[key.strip()] = value.strip()
    return overrides
