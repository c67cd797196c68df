# closed/oracle.py
"""Truncated-Fock fidelity-susceptibility check of the eigenstate QFI."""

import logging
import math

import numpy as np
from scipy.linalg import expm

from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import StepError
from tripartite.core.exceptions import TruncationError
from tripartite.core.frames import squeezed_frame
from tripartite.core.parameters import SystemParameters

from .eigenstate import EigenstateSpec

logger = logging.getLogger(__name__)

TAIL_MASS_LIMIT = 1e-12
STEP_AGREEMENT = 1e-2


def truncation_for(xi: float) -> int:
    return max(64, math.ceil(16.0 * math.exp(2.0 * xi)))


def _annihilation(dim):
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1)


def squeezed_number_state(xi: float, n: int, dim: int) -> np.ndarray:
    """
    S(ξ)|n⟩ with S(ξ) = exp[(ξ/2)(b² − b†²)], computed in a basis of ``2·dim``.

    Raises TruncationError when the mass beyond ``dim`` exceeds the tail limit.
    """
    if n >= dim:
        raise TruncationError(f"Fock label {n} does not fit in {dim} levels")
    size = 2 * dim
    a = _annihilation(size)
    a2 = a @ a
    generator = 0.5 * xi * (a2 - a2.T)
    psi = expm(generator)[:, n]
    tail = float(np.sum(psi[dim:] ** 2))
    if tail > TAIL_MASS_LIMIT:
        raise TruncationError(
            f"Fock tail mass {tail:.3e} beyond {dim} levels exceeds {TAIL_MASS_LIMIT:g}",
        )
    return psi


def _xi(p: SystemParameters, lam: float) -> float:
    q = p.replace(lam=lam)
    frame = squeezed_frame(q)
    Lambda = frame.lambda_e * q.x_b + q.g0
    ratio = 4.0 * Lambda**2 / (q.omega_nv * q.omega_k)
    if ratio >= 1.0:
        raise TruncationError("finite-difference stencil crosses the critical point")
    return -0.25 * math.log1p(-ratio)


def _central_estimate(p, n, dim, lam, h):
    lo, hi = lam - h, lam + h
    minus = squeezed_number_state(_xi(p, lo), n, dim)
    plus = squeezed_number_state(_xi(p, hi), n, dim)
    # 1 − |⟨ψ₋|ψ₊⟩| for real, nearly parallel states
    infidelity = 0.5 * float(np.sum((plus - minus) ** 2))
    return 8.0 * infidelity / (hi - lo) ** 2


def fock_oracle_qfi(
    spec: EigenstateSpec,
    p: SystemParameters,
    dim: int | None = None,
    h: float | None = None,
) -> float:
    """
    QFI of λ from the fidelity between neighbouring squeezed number states.

    g0 is held fixed while λ moves. Two Richardson levels over h, h/2, h/4 must
    agree to 1 %.
    """
    if dim is None:
        dim = truncation_for(spec.phase_point.xi)
    if h is None:
        scale = abs(p.lam) or spec.phase_point.critical_coupling
        h = 1e-5 * scale
    if not h > 0:
        raise DomainError(f"finite-difference step must be positive, got {h!r}")

    coarse, mid, fine = (_central_estimate(p, spec.n, dim, p.lam, h / k) for k in (1, 2, 4))
    first = (4.0 * mid - coarse) / 3.0
    second = (4.0 * fine - mid) / 3.0
    if abs(first - second) > STEP_AGREEMENT * max(abs(first), abs(second)):
        raise StepError(
            f"Richardson estimates {first:.6e} and {second:.6e} disagree by more than 1%",
        )
    logger.debug(f"Fock oracle: n={spec.n}, dim={dim}, F={second:.6e}")
    return max(second, 0.0)
