import numpy as np
from factory import Factory
from factory import LazyFunction

from tripartite.estimation.states import GaussianState


class GaussianStateFactory(Factory[GaussianState]):
    """A displaced thermal state; override ``cov`` for anything squeezed."""

    mean = LazyFunction(lambda: np.array([0.3, -0.2]))
    cov = LazyFunction(lambda: np.array([[1.2, 0.1], [0.1, 0.9]]))

    class Meta:
        model = GaussianState
