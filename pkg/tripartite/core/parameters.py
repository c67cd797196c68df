# core/parameters.py
import dataclasses
import math
from dataclasses import dataclass

from .exceptions import DomainError

TWO_PI = 2.0 * math.pi

# fields converted between Hz and rad/s at the configuration boundary
FREQUENCY_FIELDS = (
    "omega_k",
    "omega_m",
    "omega_nv",
    "lam",
    "g0",
    "omega_p",
    "kappa_a",
    "kappa_b",
    "kappa_sigma",
    "drive",
)


@dataclass(frozen=True)
class SystemParameters:
    """
    One instance of the spin-magnon-mechanical hybrid system.

    Every frequency, coupling and rate is an angular frequency in rad/s; only
    ``x_b`` is dimensionless.
    """

    omega_k: float
    omega_m: float
    omega_nv: float
    lam: float
    g0: float = 0.0
    omega_p: float = 0.0
    kappa_a: float = 1.0
    kappa_b: float = 1.0
    kappa_sigma: float = 1.0
    drive: float = 0.0
    x_b: float = 1.0

    def __post_init__(self):
        for name in ("omega_k", "omega_m", "omega_nv", "kappa_a", "kappa_b", "kappa_sigma"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{name} must be strictly positive, got {value!r}")
        for name in ("lam", "g0", "omega_p", "drive", "x_b"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.omega_p >= self.omega_m:
            raise DomainError(
                f"omega_p ({self.omega_p!r}) must stay below omega_m ({self.omega_m!r})",
            )

    @classmethod
    def from_hz(cls, **values):
        """Build from ordinary frequencies, converting to rad/s."""
        converted = {
            key: value * TWO_PI if key in FREQUENCY_FIELDS else value
            for key, value in values.items()
        }
        return cls(**converted)

    def to_hz(self):
        return {
            field.name: getattr(self, field.name) / TWO_PI
            if field.name in FREQUENCY_FIELDS
            else getattr(self, field.name)
            for field in dataclasses.fields(self)
        }

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class GeometryParameters:
    """SI description of the micromagnet, NV centre and cantilever."""

    g_e: float
    mu_B: float
    mu_0: float
    gamma_gyro: float
    M_s: float
    R: float
    r0: float
    M_eff: float
    omega_m: float

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{field.name} must be strictly positive, got {value!r}")
        if self.r0 <= self.R:
            raise DomainError("r0 must exceed R: the NV centre sits outside the magnet")
