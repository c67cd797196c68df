import pytest

from tripartite.core.frames import squeezed_frame
from tripartite.core.parameters import SystemParameters
from tripartite.core.tests.factories import ClosedSystemParametersFactory
from tripartite.core.tests.factories import SystemParametersFactory
from tripartite.sweeps.presets import feasibility_parameters


@pytest.fixture
def params() -> SystemParameters:
    return SystemParametersFactory()


@pytest.fixture
def closed_params() -> SystemParameters:
    return ClosedSystemParametersFactory()


@pytest.fixture
def feasibility() -> SystemParameters:
    return feasibility_parameters()


@pytest.fixture
def feasibility_frame(feasibility):
    return squeezed_frame(feasibility)
