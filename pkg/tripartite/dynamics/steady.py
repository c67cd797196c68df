# dynamics/steady.py
from dataclasses import dataclass
from dataclasses import replace

import numpy as np

from tripartite.core.parameters import SystemParameters


@dataclass(frozen=True, eq=False)
class SteadyState:
    """First moments of the seven fluctuation variables and the mechanical covariance."""

    mean_Xa: float
    mean_Pa: float
    mean_sigma_z: float = -0.5
    mean_Xb: float = 0.0
    mean_Pb: float = 0.0
    mean_sigma_x: float = 0.0
    mean_sigma_y: float = 0.0
    cov: np.ndarray | None = None

    def with_covariance(self, cov):
        return replace(self, cov=np.asarray(cov, dtype=float))


def steady_means(p: SystemParameters) -> SteadyState:
    """Driven magnon quadratures; the spin sits in its ground state."""
    denominator = p.kappa_a**2 + p.omega_k**2
    return SteadyState(
        mean_Xa=p.drive * p.omega_k / denominator,
        mean_Pa=p.drive * p.kappa_a / denominator,
    )
