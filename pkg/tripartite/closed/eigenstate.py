# closed/eigenstate.py
import logging
import math
from dataclasses import dataclass

from tripartite.core.choices import Phase
from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import PhaseError
from tripartite.core.frames import DEFAULT_CRITICAL_TOLERANCE
from tripartite.core.frames import PhasePoint
from tripartite.core.frames import SqueezedFrame
from tripartite.core.frames import phase_point
from tripartite.core.frames import squeezed_frame
from tripartite.core.parameters import SystemParameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenstateSpec:
    """The n-th magnon eigenstate at one phase point."""

    n: int
    phase_point: PhasePoint
    frame: SqueezedFrame

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n!r}")
        if self.phase_point.phase == Phase.SUPERRADIANT:
            raise PhaseError("the eigenstate exists only up to the critical point")

    @classmethod
    def at(cls, p: SystemParameters, n: int, tolerance=DEFAULT_CRITICAL_TOLERANCE):
        frame = squeezed_frame(p)
        return cls(n=n, phase_point=phase_point(p, frame, tolerance), frame=frame)


def eigenstate_qfi(spec: EigenstateSpec, p: SystemParameters) -> float:
    """
    QFI of λ carried by the n-th eigenstate.

    Only the λ_e·x_b term of Λ is differentiated; g0 is an independent parameter.
    Returns ``math.inf`` at the critical point.
    """
    point = spec.phase_point
    if point.phase == Phase.CRITICAL:
        return math.inf
    if point.phase != Phase.NORMAL:
        raise PhaseError("eigenstate QFI is divergent beyond the critical point")
    n = spec.n
    gap = point.critical_coupling**2 - point.Lambda**2
    return (
        point.Lambda**2
        * math.exp(2.0 * spec.frame.r)
        * p.x_b**2
        * (n * n + n + 1)
        / (2.0 * gap**2)
    )


@dataclass(frozen=True)
class ScanPoint:
    x_b: float
    qfi: float
    phase: Phase


def critical_qfi_scan(p: SystemParameters, xs, n: int, tolerance=DEFAULT_CRITICAL_TOLERANCE):
    """
    Eigenstate QFI along a set of displacement set-points.

    Boundary points carry the +∞ sentinel; superradiant points carry NaN.
    """
    scan = []
    for x in xs:
        q = p.replace(x_b=float(x))
        frame = squeezed_frame(q)
        point = phase_point(q, frame, tolerance)
        if point.phase == Phase.SUPERRADIANT:
            scan.append(ScanPoint(x_b=q.x_b, qfi=math.nan, phase=point.phase))
            continue
        spec = EigenstateSpec(n=n, phase_point=point, frame=frame)
        scan.append(ScanPoint(x_b=q.x_b, qfi=eigenstate_qfi(spec, q), phase=point.phase))
    logger.debug(f"Scanned {len(scan)} set-points for n = {n}")
    return scan
