# dynamics/families.py
import logging
import math

import numpy as np

from tripartite.core.choices import FormulaMode
from tripartite.core.frames import SqueezedFrame
from tripartite.core.frames import squeezed_frame
from tripartite.core.hierarchy import validate_hierarchy
from tripartite.core.parameters import SystemParameters
from tripartite.estimation.states import GaussianState

from .covariance import covariance_from_gap
from .drift import DriftModel
from .drift import coupling_slope
from .drift import lambda_for_gap
from .steady import SteadyState
from .steady import steady_means

logger = logging.getLogger(__name__)

GAP_STEP_FRACTION = 1e-2
RELATIVE_STEP = 1e-4


class MechanicalFamily:
    """
    The map λ ↦ mechanical steady state at fixed drive, squeezing and damping.

    Δ is carried relative to an anchor (λ0, Δ0) as Δ0 − ω_m·c·(λ − λ0)(λ + λ0),
    which keeps finite differences meaningful when Δ ≪ ω_m². Instances are
    immutable and safe to share between workers.
    """

    def __init__(
        self,
        p: SystemParameters,
        frame: SqueezedFrame,
        means: SteadyState,
        mode: FormulaMode = FormulaMode.CORRECTED,
        anchor_lambda: float | None = None,
        anchor_delta: float | None = None,
    ):
        self.parameters = p
        self.frame = frame
        self.means = means
        self.mode = FormulaMode(mode)
        self.slope = coupling_slope(p, frame, means, self.mode)
        self.anchor_lambda = p.lam if anchor_lambda is None else anchor_lambda
        if anchor_delta is None:
            anchor_delta = p.kappa_b**2 - self.omega_eff(self.anchor_lambda) * p.omega_m
        self.anchor_delta = anchor_delta

    @classmethod
    def from_parameters(cls, p: SystemParameters, mode=FormulaMode.CORRECTED):
        return cls(p, squeezed_frame(p), steady_means(p), mode)

    @classmethod
    def at_gap(cls, p: SystemParameters, ratio: float, mode=FormulaMode.CORRECTED):
        """Family anchored where Δ = ratio·κ_b² holds by construction."""
        frame = squeezed_frame(p)
        means = steady_means(p)
        lam = lambda_for_gap(p, frame, means, ratio, mode)
        logger.debug(f"Anchoring family at λ0 = {lam:.12g} rad/s, Δ/κ_b² = {ratio:g}")
        return cls(
            p.replace(lam=lam),
            frame,
            means,
            mode,
            anchor_lambda=lam,
            anchor_delta=ratio * p.kappa_b**2,
        )

    @property
    def lam(self):
        return self.anchor_lambda

    @property
    def drift(self) -> DriftModel:
        return self.drift_at(self.anchor_lambda, validate_hierarchy(self.parameters))

    def omega_eff(self, lam):
        return self.slope * lam**2 - self.parameters.omega_m

    def delta(self, lam):
        shift = (lam - self.anchor_lambda) * (lam + self.anchor_lambda)
        return self.anchor_delta - self.parameters.omega_m * self.slope * shift

    def delta_derivative(self, lam):
        return -2.0 * self.parameters.omega_m * self.slope * lam

    def drift_at(self, lam, diagnostics=()) -> DriftModel:
        p = self.parameters
        return DriftModel.from_rates(
            p.kappa_b,
            p.omega_m,
            self.omega_eff(lam),
            delta=self.delta(lam),
            diagnostics=diagnostics,
        )

    def covariance(self, lam) -> np.ndarray:
        p = self.parameters
        return covariance_from_gap(p.kappa_b, p.omega_m, self.omega_eff(lam), self.delta(lam))

    def tangent(self, lam):
        """(∂mean/∂λ, ∂C/∂λ) of the steady state in closed form."""
        p = self.parameters
        kappa, omega_m = p.kappa_b, p.omega_m
        omega, delta = self.omega_eff(lam), self.delta(lam)
        d_omega = 2.0 * self.slope * lam
        # ∂(1/4Δ) = −Δ'/(4Δ²)
        d_inverse = -self.delta_derivative(lam) / (4.0 * delta**2)
        c11 = (kappa**2 + omega_m**2) * d_inverse
        c22 = omega * d_omega / (2.0 * delta) + (kappa**2 + omega**2) * d_inverse
        c12 = kappa * d_omega / (4.0 * delta) + kappa * (omega + omega_m) * d_inverse
        return np.zeros(2), np.array([[c11, c12], [c12, c22]])

    def steady_state(self, lam) -> SteadyState:
        return self.means.with_covariance(self.covariance(lam))

    def __call__(self, lam) -> GaussianState:
        state = self.steady_state(lam)
        return GaussianState(mean=np.array([state.mean_Xb, state.mean_Pb]), cov=state.cov)

    def step(self, lam) -> float:
        """Finite-difference step moving Δ by about one percent, capped at 1e-4·|λ|."""
        if lam == 0:
            return RELATIVE_STEP
        cap = RELATIVE_STEP * abs(lam)
        slope = abs(self.delta_derivative(lam))
        if slope == 0 or not math.isfinite(slope):
            return cap
        return min(cap, GAP_STEP_FRACTION * abs(self.delta(lam)) / slope)
