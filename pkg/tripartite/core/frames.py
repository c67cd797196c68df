# core/frames.py
import logging
import math
from dataclasses import dataclass

from .choices import Phase
from .exceptions import DomainError
from .parameters import SystemParameters

logger = logging.getLogger(__name__)

DEFAULT_CRITICAL_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SqueezedFrame:
    r: float
    lambda_e: float
    delta_m: float

    @property
    def enhancement(self):
        """e^{2r}, the squeezing gain on the effective-frequency slope."""
        return math.exp(2.0 * self.r)


@dataclass(frozen=True)
class PhasePoint:
    """Effective coupling, eigenstate squeezing and phase at one parameter point."""

    Lambda: float
    xi: float
    x_minus: float
    x_plus: float
    phase: Phase
    critical_coupling: float
    coupling_ratio: float
    decoupling_ratio: float

    @property
    def is_normal(self):
        return self.phase == Phase.NORMAL


def squeezed_frame(p: SystemParameters) -> SqueezedFrame:
    """
    Squeezed-frame quantities for the parametrically driven mechanical mode.

    ``tanh 2r = Ω_p/(ω_m − Ω_p)`` must have its argument in (−1, 1).
    """
    detuning = p.omega_m - p.omega_p
    argument = p.omega_p / detuning
    if not -1.0 < argument < 1.0:
        raise DomainError(
            f"squeezing undefined: Ω_p/(ω_m − Ω_p) = {argument!r} is outside (−1, 1)",
        )
    r = 0.5 * math.atanh(argument)
    return SqueezedFrame(
        r=r,
        lambda_e=p.lam * math.exp(r),
        delta_m=detuning / math.cosh(2.0 * r),
    )


def _critical_position(numerator, lambda_e):
    if lambda_e != 0:
        return numerator / lambda_e
    if numerator == 0:
        return math.nan
    return math.copysign(math.inf, numerator)


def phase_point(
    p: SystemParameters,
    frame: SqueezedFrame,
    tolerance: float = DEFAULT_CRITICAL_TOLERANCE,
) -> PhasePoint:
    """
    Classify the phase of the magnon eigenstate at ``p``.

    The critical positions are divided by λ_e so that Λ(x_±)² = ω_NV·ω_K/4.
    ξ is +∞ at and beyond the critical point.
    """
    Lambda = frame.lambda_e * p.x_b + p.g0
    critical = math.sqrt(p.omega_nv * p.omega_k) / 2.0
    ratio = 4.0 * Lambda**2 / (p.omega_nv * p.omega_k)

    if abs(1.0 - ratio) < tolerance:
        phase = Phase.CRITICAL
    elif ratio < 1.0:
        phase = Phase.NORMAL
    else:
        phase = Phase.SUPERRADIANT

    xi = -0.25 * math.log1p(-ratio) if phase == Phase.NORMAL else math.inf
    if phase != Phase.NORMAL:
        logger.debug(f"Phase point is {phase.label}: 4Λ²/(ω_NV ω_K) = {ratio:.12g}")

    return PhasePoint(
        Lambda=Lambda,
        xi=xi,
        x_minus=_critical_position(-critical - p.g0, frame.lambda_e),
        x_plus=_critical_position(critical - p.g0, frame.lambda_e),
        phase=phase,
        critical_coupling=critical,
        coupling_ratio=ratio,
        decoupling_ratio=p.omega_k / p.omega_nv,
    )
