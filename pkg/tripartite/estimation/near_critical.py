# estimation/near_critical.py
import logging
import math
from dataclasses import dataclass

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import DomainError
from tripartite.core.frames import SqueezedFrame
from tripartite.core.parameters import SystemParameters
from tripartite.dynamics.drift import DriftModel
from tripartite.dynamics.steady import steady_means

logger = logging.getLogger(__name__)

VALIDITY_GAP = 1e-2
CONSISTENCY_FLOOR = 1e-6

# (Δ-form, τ-form) prefactors per formula mode
PREFACTORS = {
    FormulaMode.CORRECTED: (8.0, 2.0),
    FormulaMode.STRICT_PAPER: (16.0, 16.0),
}


@dataclass(frozen=True)
class NearCriticalQFI:
    delta_form: float
    tau_form: float
    relative_gap: float
    discrepancy: float
    consistent: bool
    precision: float
    mode: FormulaMode


def near_critical_qfi(
    p: SystemParameters,
    frame: SqueezedFrame,
    dm: DriftModel,
    mode: FormulaMode = FormulaMode.CORRECTED,
) -> NearCriticalQFI:
    """
    Analytic QFI of the mechanical steady state close to the dissipative gap.

    Both the Δ-form and the τ-form are evaluated; ``consistent`` records whether
    they agree to within Δ/κ_b². ``precision`` is the Cramér-Rao bound written in
    closed form through τ.
    """
    mode = FormulaMode(mode)
    if dm.omega_eff <= 0:
        raise DomainError("τ-form needs a positive effective frequency")
    relative_gap = dm.relative_gap
    if relative_gap > VALIDITY_GAP:
        logger.warning(f"Near-critical QFI requested far from the gap (Δ/κ_b² = {relative_gap:.3g})")

    delta_prefactor, tau_prefactor = PREFACTORS[mode]
    x_a = steady_means(p).mean_Xa
    signal = p.lam**2 * math.exp(4.0 * frame.r) * x_a**4 / p.omega_nv**2
    delta_form = delta_prefactor * p.omega_m**2 * signal / dm.Delta**2
    tau_form = tau_prefactor * p.omega_m * dm.tau**2 * signal / dm.omega_eff

    discrepancy = abs(delta_form - tau_form) / delta_form if delta_form else 0.0
    consistent = discrepancy <= max(relative_gap, CONSISTENCY_FLOOR)
    if not consistent:
        logger.warning(
            f"Δ-form and τ-form differ by {discrepancy:.3g} at Δ/κ_b² = {relative_gap:.3g} ({mode})",
        )

    precision = (
        math.sqrt(dm.omega_eff)
        * p.omega_nv
        / (
            math.sqrt(tau_prefactor * p.omega_m)
            * abs(p.lam)
            * dm.tau
            * math.exp(2.0 * frame.r)
            * x_a**2
        )
        if p.lam and x_a
        else math.inf
    )
    return NearCriticalQFI(
        delta_form=delta_form,
        tau_form=tau_form,
        relative_gap=relative_gap,
        discrepancy=discrepancy,
        consistent=consistent,
        precision=precision,
        mode=mode,
    )


def precision_bound(F: float) -> float:
    """Quantum Cramér-Rao bound δλ = 1/√F."""
    if math.isnan(F) or F <= 0:
        raise DomainError(f"QFI must be positive, got {F!r}")
    return 1.0 / math.sqrt(F)
