# dynamics/drift.py
import cmath
import logging
import math
from dataclasses import dataclass
from dataclasses import field

import numpy as np

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import DomainError
from tripartite.core.frames import SqueezedFrame
from tripartite.core.hierarchy import DEFAULT_HIERARCHY_FACTOR
from tripartite.core.hierarchy import validate_hierarchy
from tripartite.core.parameters import SystemParameters

from .steady import SteadyState

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DriftModel:
    """
    Reduced drift of the mechanical fluctuations, V = [[−κ_b, ω_m], [ω_eff, −κ_b]].

    ``Delta`` may be supplied directly when it is known more accurately than
    κ_b² − ω_eff·ω_m can be evaluated.
    """

    V: np.ndarray
    kappa_b: float
    omega_m: float
    omega_eff: float
    eigenvalues: tuple[complex, complex]
    Delta: float
    tau: float
    stable: bool
    diagnostics: tuple = field(default=())

    @classmethod
    def from_rates(cls, kappa_b, omega_m, omega_eff, delta=None, diagnostics=()):
        if delta is None:
            delta = kappa_b**2 - omega_eff * omega_m
        root = cmath.sqrt(omega_m * omega_eff)
        stable = delta > 0
        if not stable:
            tau = math.nan
        elif omega_eff > 0:
            # 1/(κ − √(ω_m ω)) without the cancellation
            tau = (kappa_b + root.real) / delta
        else:
            tau = 1.0 / kappa_b
        return cls(
            V=np.array([[-kappa_b, omega_m], [omega_eff, -kappa_b]]),
            kappa_b=kappa_b,
            omega_m=omega_m,
            omega_eff=omega_eff,
            eigenvalues=(-kappa_b + root, -kappa_b - root),
            Delta=delta,
            tau=tau,
            stable=stable,
            diagnostics=tuple(diagnostics),
        )

    @property
    def relative_gap(self):
        """Δ/κ_b², the distance from the dissipative critical point."""
        return self.Delta / self.kappa_b**2


def coupling_slope(
    p: SystemParameters,
    frame: SqueezedFrame,
    means: SteadyState,
    mode: FormulaMode = FormulaMode.CORRECTED,
) -> float:
    """c in ω_eff = c·λ² − ω_m."""
    enhancement = frame.enhancement if mode == FormulaMode.CORRECTED else 1.0
    return 2.0 * enhancement * means.mean_Xa**2 / p.omega_nv


def effective_frequency(p, frame, means, mode=FormulaMode.CORRECTED) -> float:
    return coupling_slope(p, frame, means, mode) * p.lam**2 - p.omega_m


def drift_model(
    p: SystemParameters,
    frame: SqueezedFrame,
    means: SteadyState,
    mode: FormulaMode = FormulaMode.CORRECTED,
    hierarchy_factor: float = DEFAULT_HIERARCHY_FACTOR,
) -> DriftModel:
    """Instability is reported through ``stable``, never raised."""
    dm = DriftModel.from_rates(
        p.kappa_b,
        p.omega_m,
        effective_frequency(p, frame, means, mode),
        diagnostics=validate_hierarchy(p, hierarchy_factor),
    )
    if not dm.stable:
        logger.info(f"Drift is unstable at λ = {p.lam:.6g} rad/s (Δ = {dm.Delta:.6g})")
    return dm


def critical_lambda(p, frame, means, mode=FormulaMode.CORRECTED) -> float:
    """λ at which the dissipative gap Δ closes; +∞ without a magnon drive."""
    slope = coupling_slope(p, frame, means, mode)
    if slope == 0:
        return math.inf
    return math.sqrt((p.kappa_b**2 + p.omega_m**2) / (p.omega_m * slope))


def lambda_for_gap(p, frame, means, ratio: float, mode=FormulaMode.CORRECTED) -> float:
    """λ ≥ 0 with Δ = ratio·κ_b²."""
    slope = coupling_slope(p, frame, means, mode)
    numerator = p.kappa_b**2 * (1.0 - ratio) + p.omega_m**2
    if slope == 0 or numerator < 0:
        raise DomainError(f"no coupling realises Δ/κ_b² = {ratio!r}")
    return math.sqrt(numerator / (p.omega_m * slope))
