# closed/adiabatic.py
import math
from dataclasses import dataclass

from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import PhaseError
from tripartite.core.frames import DEFAULT_CRITICAL_TOLERANCE
from tripartite.core.frames import phase_point
from tripartite.core.frames import squeezed_frame
from tripartite.core.parameters import SystemParameters

from .choices import TimeScaling


def _check_gamma(gamma_ad):
    if not 0.0 < gamma_ad < 1.0:
        raise DomainError(f"gamma_ad must lie in (0, 1), got {gamma_ad!r}")


@dataclass(frozen=True)
class AdiabaticSchedule:
    gamma_ad: float
    T: float

    def __post_init__(self):
        _check_gamma(self.gamma_ad)
        if not self.T > 0:
            raise DomainError(f"sweep time must be positive, got {self.T!r}")


def adiabatic_time(
    p: SystemParameters,
    Lambda_final: float,
    gamma_ad: float,
    tolerance: float = DEFAULT_CRITICAL_TOLERANCE,
) -> float:
    """
    Time of an adiabatic sweep ending at Λ_final.

    The critical endpoint yields +∞ with no phase attached; callers that need
    the Critical label read it from ``phase_point`` at the same Λ and tolerance.
    """
    _check_gamma(gamma_ad)
    ratio = 4.0 * Lambda_final**2 / (p.omega_nv * p.omega_k)
    if abs(1.0 - ratio) < tolerance:
        return math.inf
    if ratio > 1.0:
        raise PhaseError("no adiabatic path reaches beyond the critical point")
    return 1.0 / (2.0 * gamma_ad * p.omega_k * math.sqrt(1.0 - ratio))


def lambda_squared_from_time(p: SystemParameters, schedule: AdiabaticSchedule) -> float:
    """Invert the adiabatic time for Λ²."""
    critical_sq = p.omega_nv * p.omega_k / 4.0
    Lambda_sq = critical_sq * (1.0 - 1.0 / (2.0 * schedule.gamma_ad * p.omega_k * schedule.T) ** 2)
    if Lambda_sq < 0:
        raise DomainError(
            f"sweep time {schedule.T!r} is shorter than the decoupled adiabatic time",
        )
    return Lambda_sq


def qfi_vs_time(
    p: SystemParameters,
    schedule: AdiabaticSchedule,
    n: int,
    scaling: TimeScaling = TimeScaling.FIXED_LAMBDA,
) -> float:
    """
    Large-n eigenstate QFI expressed through the sweep time T.

    With ``FIXED_LAMBDA`` Λ comes from ``p`` and F grows as T⁴; with
    ``LAMBDA_FROM_TIME`` Λ is the coupling reached after the sweep.
    """
    frame = squeezed_frame(p)
    critical_sq = p.omega_nv * p.omega_k / 4.0
    if scaling == TimeScaling.LAMBDA_FROM_TIME:
        Lambda_sq = lambda_squared_from_time(p, schedule)
    else:
        Lambda_sq = phase_point(p, frame).Lambda ** 2
    return (
        8.0
        * (schedule.gamma_ad * p.omega_k * schedule.T) ** 4
        * Lambda_sq
        * math.exp(2.0 * frame.r)
        * p.x_b**2
        * n**2
        / critical_sq**2
    )
