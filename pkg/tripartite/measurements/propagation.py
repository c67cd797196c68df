# measurements/propagation.py
import logging
import math
from dataclasses import dataclass

import numpy as np

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import StabilityError
from tripartite.core.frames import SqueezedFrame
from tripartite.core.parameters import SystemParameters
from tripartite.dynamics.drift import DriftModel
from tripartite.dynamics.drift import coupling_slope
from tripartite.dynamics.steady import steady_means
from tripartite.estimation.derivatives import default_step
from tripartite.estimation.derivatives import richardson_difference

from .moments import DEFAULT_MAX_ORDER
from .moments import MomentEngine
from .operators import MeasurementOp

logger = logging.getLogger(__name__)

DEFAULT_NULL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PropagatedPrecision:
    """δλ|_O = ΔO/|∂⟨O⟩/∂λ| with its ingredients."""

    value: float
    spread: float
    sensitivity: float
    null_sensitivity: bool


def expectation_derivative(op, state_fn, lam, h=None, max_order=DEFAULT_MAX_ORDER) -> float:
    """
    ∂⟨O⟩/∂λ. Families exposing ``tangent(λ)`` are differentiated exactly through
    the moment engine; any other state map by a Richardson difference.
    """
    poly = op.polynomial() if isinstance(op, MeasurementOp) else op
    tangent = getattr(state_fn, "tangent", None)
    if tangent is not None:
        d_mean, d_cov = tangent(lam)
        engine = MomentEngine(state_fn(lam), max_order)
        return float(engine.expectation_derivative(poly, d_mean, d_cov).real)
    if h is None:
        h = default_step(state_fn, lam)

    def mean(x):
        return MomentEngine(state_fn(x), max_order).expectation(poly).real

    return float(richardson_difference(mean, lam, h))


def error_propagation(
    op: MeasurementOp,
    state_fn,
    lam: float,
    h: float | None = None,
    tolerance: float = DEFAULT_NULL_TOLERANCE,
    max_order: int = DEFAULT_MAX_ORDER,
) -> PropagatedPrecision:
    """
    Precision of λ inferred from the mean of ``op``.

    A sensitivity below ``tolerance`` is a null result: δλ = +∞, not an error.
    """
    engine = MomentEngine(state_fn(lam), max_order)
    spread = math.sqrt(max(engine.variance(op.polynomial()), 0.0))
    sensitivity = expectation_derivative(op, state_fn, lam, h, max_order)
    if abs(sensitivity) < tolerance:
        logger.warning(f"{op.kind} carries no information on λ (|∂⟨O⟩/∂λ| = {abs(sensitivity):.3e})")
        return PropagatedPrecision(math.inf, spread, sensitivity, null_sensitivity=True)
    return PropagatedPrecision(spread / abs(sensitivity), spread, sensitivity, null_sensitivity=False)


def intensity_precision_closed_form(
    dm: DriftModel,
    cov,
    p: SystemParameters,
    frame: SqueezedFrame,
    mode: FormulaMode = FormulaMode.CORRECTED,
) -> float:
    """
    Intensity-measurement precision from the closed-form covariance.

    ``corrected`` uses the zero-mean Gaussian number variance ½·Tr C² − ¼ with
    ⟨n⟩ = (C11 + C22)/2 − ½. ``strict_paper`` evaluates the printed
    sqrt((C11 + C22)² − 1)/|∂(C11 + C22)/∂λ| with C in the normalisation where
    vacuum is I. Returns +∞ for a λ-independent covariance.
    """
    if not dm.stable:
        raise StabilityError("intensity precision needs a stable steady state")
    cov = np.asarray(cov, dtype=float)
    slope = coupling_slope(p, frame, steady_means(p), mode)
    kappa, omega_m, omega, delta = dm.kappa_b, dm.omega_m, dm.omega_eff, dm.Delta
    d_omega = 2.0 * slope * p.lam
    d_delta = -omega_m * d_omega
    # C11 + C22 = ½ + (2κ² + ω_m² + ω²)/(4Δ)
    trace_rest = 2.0 * kappa**2 + omega_m**2 + omega**2
    d_trace = (2.0 * omega * d_omega) / (4.0 * delta) - trace_rest * d_delta / (4.0 * delta**2)
    if d_trace == 0:
        return math.inf
    if FormulaMode(mode) == FormulaMode.STRICT_PAPER:
        unit_trace = 2.0 * np.trace(cov)
        return math.sqrt(max(unit_trace**2 - 1.0, 0.0)) / abs(2.0 * d_trace)
    variance = 0.5 * float(np.sum(cov * cov)) - 0.25
    return math.sqrt(max(variance, 0.0)) / abs(0.5 * d_trace)
