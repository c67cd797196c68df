# estimation/states.py
import math
from dataclasses import dataclass

import numpy as np

from tripartite.core.exceptions import DomainError

VACUUM_DETERMINANT = 0.25
DETERMINANT_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class GaussianState:
    """
    Single-mode Gaussian state in quadrature form.

    ``cov`` uses the vacuum = I/2 convention, so det cov ≥ 1/4.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float).reshape(2)
        cov = np.asarray(self.cov, dtype=float).reshape(2, 2)
        if not np.all(np.isfinite(cov)) or not np.all(np.isfinite(mean)):
            raise DomainError("Gaussian state moments must be finite")
        if not np.isclose(cov[0, 1], cov[1, 0], rtol=1e-12, atol=0.0):
            raise DomainError("covariance matrix must be symmetric")
        if cov[0, 0] <= 0 or np.linalg.det(cov) < VACUUM_DETERMINANT * (1 - DETERMINANT_SLACK):
            raise DomainError("covariance violates the uncertainty relation det C ≥ 1/4")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @classmethod
    def vacuum(cls):
        return cls(mean=np.zeros(2), cov=0.5 * np.eye(2))

    @property
    def determinant(self):
        c = self.cov
        return float(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0])

    @property
    def purity(self):
        return min(1.0, 1.0 / (2.0 * math.sqrt(self.determinant)))

    def rotated(self, theta: float):
        """Apply the phase-space rotation by ``theta`` to mean and covariance."""
        c, s = math.cos(theta), math.sin(theta)
        rotation = np.array([[c, -s], [s, c]])
        return GaussianState(mean=rotation @ self.mean, cov=rotation @ self.cov @ rotation.T)

    def as_vector(self):
        """(C11, C12, C22, q, p), the quantities finite differences act on."""
        c = self.cov
        return np.array([c[0, 0], c[0, 1], c[1, 1], self.mean[0], self.mean[1]])
