# dynamics/covariance.py
import logging
import math

import numpy as np
from scipy.linalg import solve_continuous_lyapunov

from tripartite.core.exceptions import ConvergenceError
from tripartite.core.exceptions import StabilityError
from tripartite.core.parameters import SystemParameters

from .drift import DriftModel

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-12


def diffusion_matrix(kappa_b: float) -> np.ndarray:
    """Zero-temperature diffusion 2κ_b·(I/2)."""
    return kappa_b * np.eye(2)


def covariance_from_gap(kappa_b, omega_m, omega_eff, delta) -> np.ndarray:
    if not delta > 0:
        raise StabilityError(f"no steady state for Δ = {delta!r}")
    common = delta + kappa_b**2
    scale = 4.0 * delta
    c11 = (common + omega_m**2) / scale
    c22 = (common + omega_eff**2) / scale
    c12 = kappa_b * (omega_eff + omega_m) / scale
    return np.array([[c11, c12], [c12, c22]])


def steady_covariance(dm: DriftModel, p: SystemParameters) -> np.ndarray:
    """
    Closed-form steady covariance, vacuum = I/2.

    2κ_b² − ω_eff·ω_m is written as Δ + κ_b² so a precise Δ survives near the gap.
    """
    if not dm.stable:
        raise StabilityError(f"drift is unstable at λ = {p.lam!r}")
    return covariance_from_gap(dm.kappa_b, dm.omega_m, dm.omega_eff, dm.Delta)


def lyapunov_oracle(dm: DriftModel, diffusion: np.ndarray) -> np.ndarray:
    """Solve V·C + C·Vᵀ + D = 0 numerically."""
    eigenvalues = np.linalg.eigvals(dm.V)
    if np.max(eigenvalues.real) >= 0:
        raise StabilityError("drift matrix has an eigenvalue with non-negative real part")
    cov = solve_continuous_lyapunov(dm.V, -diffusion)
    cov = 0.5 * (cov + cov.T)
    residual = np.linalg.norm(dm.V @ cov + cov @ dm.V.T + diffusion)
    scale = 2.0 * np.linalg.norm(dm.V) * np.linalg.norm(cov) + np.linalg.norm(diffusion)
    if residual > RESIDUAL_TOLERANCE * scale:
        raise ConvergenceError(f"Lyapunov residual {residual:.3e} exceeds tolerance")
    return cov


def purity(cov) -> float:
    return 1.0 / (2.0 * math.sqrt(uncertainty_product(cov)))


def uncertainty_product(cov) -> float:
    """det C; at least 1/4 for a physical state."""
    cov = np.asarray(cov)
    return float(cov[0, 0] * cov[1, 1] - cov[0, 1] * cov[1, 0])
