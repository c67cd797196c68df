# estimation/gaussian.py
import logging

import numpy as np

from tripartite.core.exceptions import StepError

from .derivatives import default_step
from .derivatives import disagree
from .derivatives import one_sided_difference
from .derivatives import richardson_difference
from .states import GaussianState

logger = logging.getLogger(__name__)

PURE_STATE_GUARD = 1e-9
STEP_AGREEMENT = 1e-2
# relative moment noise below which a QFI is indistinguishable from zero
NOISE_FLOOR = 1e-12


def _moments(state: GaussianState) -> np.ndarray:
    return np.append(state.as_vector(), state.purity)


def _split(vector):
    c11, c12, c22, q, p, purity = vector
    return np.array([[c11, c12], [c12, c22]]), np.array([q, p]), purity


def qfi_from_moments(state: GaussianState, derivative: np.ndarray) -> float:
    """F = Tr[(C⁻¹C′)²]/(2(1 + P²)) + 2P′²/(1 − P⁴) + ⟨X⟩′ᵀC⁻¹⟨X⟩′."""
    d_cov, d_mean, d_purity = _split(derivative)
    inverse = np.linalg.inv(state.cov)
    P = state.purity
    product = inverse @ d_cov
    covariance_term = np.trace(product @ product) / (2.0 * (1.0 + P**2))
    if 1.0 - P < PURE_STATE_GUARD:
        if d_purity == 0 or P == 1.0:
            purity_term = 0.0
        else:
            logger.warning(f"Nearly pure state (P = {P:.12f}); using the P → 1 limit")
            purity_term = d_purity**2 / (2.0 * (1.0 - P))
    else:
        purity_term = 2.0 * d_purity**2 / (1.0 - P**4)
    mean_term = d_mean @ inverse @ d_mean
    return float(covariance_term + purity_term + mean_term)


def gaussian_qfi(state_fn, lam: float, h: float | None = None) -> float:
    """
    QFI of a one-mode Gaussian family at ``lam``.

    ``state_fn`` maps λ to a GaussianState and must tolerate concurrent calls.
    When it exposes ``step(λ)`` that step is used by default. The Richardson
    estimate is cross-checked against a second-order one-sided difference.
    """
    if h is None:
        h = default_step(state_fn, lam)

    def moments(x):
        return _moments(state_fn(x))

    state = state_fn(lam)
    central = qfi_from_moments(state, richardson_difference(moments, lam, h))
    forward = qfi_from_moments(
        state, one_sided_difference(moments, lam, h, f0=_moments(state)),
    )
    if disagree(central, forward, STEP_AGREEMENT, floor=(NOISE_FLOOR / h) ** 2):
        raise StepError(
            f"two-sided ({central:.6e}) and one-sided ({forward:.6e}) QFI disagree by more than 1%",
        )
    return central
