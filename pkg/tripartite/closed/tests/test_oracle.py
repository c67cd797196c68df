import math

import numpy as np
import pytest

from tripartite.closed.eigenstate import EigenstateSpec
from tripartite.closed.eigenstate import eigenstate_qfi
from tripartite.closed.oracle import fock_oracle_qfi
from tripartite.closed.oracle import squeezed_number_state
from tripartite.closed.oracle import truncation_for
from tripartite.core.exceptions import TruncationError
from tripartite.core.tests.factories import ClosedSystemParametersFactory


def test_reference_point():
    p = ClosedSystemParametersFactory(lam=0.3)
    spec = EigenstateSpec.at(p, 0)
    analytic = eigenstate_qfi(spec, p)
    assert fock_oracle_qfi(spec, p) == pytest.approx(analytic, rel=1e-3)


def test_no_parameter_dependence():
    p = ClosedSystemParametersFactory(x_b=0.0, g0=0.5)
    assert fock_oracle_qfi(EigenstateSpec.at(p, 1), p) == 0.0


@pytest.mark.parametrize("n", [0, 1, 2])
def test_agreement_for_low_labels(n):
    p = ClosedSystemParametersFactory(lam=1.0, g0=0.1, x_b=0.9)
    spec = EigenstateSpec.at(p, n)
    analytic = eigenstate_qfi(spec, p)
    assert fock_oracle_qfi(spec, p) == pytest.approx(analytic, rel=1e-3)


def test_randomised_normal_phase_grid():
    rng = np.random.default_rng(2024)
    critical_sq = 2.5
    for _ in range(100):
        ratio = rng.uniform(0.02, 0.9)
        Lambda = math.sqrt(ratio * critical_sq)
        g0 = rng.uniform(-0.2, 0.2)
        x_b = rng.uniform(0.5, 2.0)
        omega_p = rng.uniform(0.0, 0.3e-3)
        r = 0.5 * math.atanh(omega_p / (1e-3 - omega_p))
        lam = (Lambda - g0) / (x_b * math.exp(r))
        p = ClosedSystemParametersFactory(lam=lam, g0=g0, x_b=x_b, omega_p=omega_p)
        spec = EigenstateSpec.at(p, int(rng.integers(0, 3)))
        analytic = eigenstate_qfi(spec, p)
        assert abs(fock_oracle_qfi(spec, p) - analytic) / analytic < 1e-3


def test_growth_until_truncation_fires():
    values = []
    with pytest.raises(TruncationError):
        for ratio in (0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999, 0.9999):
            p = ClosedSystemParametersFactory(lam=math.sqrt(ratio * 2.5))
            values.append(fock_oracle_qfi(EigenstateSpec.at(p, 0), p, dim=64))
    assert len(values) >= 4
    assert values == sorted(values)


def test_squeezed_state_is_normalised():
    psi = squeezed_number_state(0.4, 2, truncation_for(0.4))
    assert float(psi @ psi) == pytest.approx(1.0, abs=1e-12)
    # squeezing couples only labels of equal parity
    assert np.allclose(psi[1::2], 0.0)
