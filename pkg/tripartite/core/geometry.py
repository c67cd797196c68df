# core/geometry.py
"""Couplings derived from the micromagnet and cantilever geometry (ħ = 1 units)."""

import math

from .exceptions import DomainError
from .parameters import GeometryParameters


def _require_positive(**values):
    for name, value in values.items():
        if not value > 0:
            raise DomainError(f"{name} must be strictly positive, got {value!r}")


def zero_point_fluctuation(M_eff: float, omega_m: float) -> float:
    _require_positive(M_eff=M_eff, omega_m=omega_m)
    return math.sqrt(1.0 / (2.0 * M_eff * omega_m))


def magnon_field(g: GeometryParameters, r: float) -> float:
    """
    On-axis x-component of the field produced by a single magnon at distance ``r``.

    The field points along −e_x, hence the negative sign.
    """
    if not r > g.R:
        raise DomainError(f"r ({r!r}) must lie outside the micromagnet of radius {g.R!r}")
    amplitude = math.sqrt(3.0 * abs(g.gamma_gyro) * g.M_s * g.R**3 / (8.0 * math.pi))
    return -g.mu_0 * amplitude / (3.0 * r**3)


def lambda_from_geometry(g: GeometryParameters) -> float:
    prefactor = 3.0 * g.g_e * g.mu_0 * g.mu_B / (8.0 * math.pi * g.r0**4)
    return prefactor * math.sqrt(
        4.0 * math.pi * abs(g.gamma_gyro) * g.M_s * g.R**3 / (3.0 * g.M_eff * g.omega_m),
    )


def pairwise_g0(lam: float, r0: float, z_zpf: float) -> float:
    """Pairwise spin-magnon coupling g0 = λ·r0/(3·z_zpf)."""
    _require_positive(r0=r0, z_zpf=z_zpf)
    return lam * r0 / (3.0 * z_zpf)
