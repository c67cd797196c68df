import math

import numpy as np
import pytest

from tripartite.closed.adiabatic import AdiabaticSchedule
from tripartite.closed.adiabatic import adiabatic_time
from tripartite.closed.adiabatic import qfi_vs_time
from tripartite.closed.choices import TimeScaling
from tripartite.closed.eigenstate import EigenstateSpec
from tripartite.closed.eigenstate import eigenstate_qfi
from tripartite.core.choices import Phase
from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import PhaseError
from tripartite.core.frames import phase_point
from tripartite.core.frames import squeezed_frame
from tripartite.core.tests.factories import ClosedSystemParametersFactory


class TestAdiabaticTime:
    def test_decoupled_endpoint(self, closed_params):
        gamma = 1e-2
        assert adiabatic_time(closed_params, 0.0, gamma) == pytest.approx(
            1 / (2 * gamma * closed_params.omega_k),
        )

    def test_three_quarters_ratio(self, closed_params):
        # 4Λ²/(ω_NV ω_K) = 3/4 with ω_NV ω_K = 10
        Lambda = math.sqrt(7.5 / 4)
        gamma = 0.05
        assert adiabatic_time(closed_params, Lambda, gamma) == pytest.approx(
            1 / (gamma * closed_params.omega_k),
        )

    def test_diverges_towards_critical_point(self, closed_params):
        critical = math.sqrt(10.0) / 2
        times = [adiabatic_time(closed_params, f * critical, 1e-2) for f in (0.9, 0.99, 0.999)]
        assert times == sorted(times)
        assert adiabatic_time(closed_params, critical, 1e-2) == math.inf

    def test_infinite_time_coincides_with_the_critical_phase(self, closed_params):
        critical = math.sqrt(10.0) / 2
        p = closed_params.replace(lam=critical)
        assert adiabatic_time(p, critical, 1e-2) == math.inf
        assert phase_point(p, squeezed_frame(p)).phase == Phase.CRITICAL

    def test_beyond_critical_point(self, closed_params):
        with pytest.raises(PhaseError):
            adiabatic_time(closed_params, 2.0, 1e-2)

    @pytest.mark.parametrize("gamma", [0.0, 1.0, -0.1])
    def test_gamma_out_of_range(self, closed_params, gamma):
        with pytest.raises(DomainError):
            adiabatic_time(closed_params, 0.1, gamma)


class TestQFIvsTime:
    def test_doubling_time_multiplies_by_sixteen(self, closed_params):
        short = qfi_vs_time(closed_params, AdiabaticSchedule(1e-2, 100.0), n=50)
        long = qfi_vs_time(closed_params, AdiabaticSchedule(1e-2, 200.0), n=50)
        assert long / short == pytest.approx(16.0)

    def test_fourth_power_slope(self, closed_params):
        times = np.array([10.0, 30.0, 100.0, 300.0])
        qfi = [qfi_vs_time(closed_params, AdiabaticSchedule(1e-2, t), n=100) for t in times]
        slope = np.polyfit(np.log(times), np.log(qfi), 1)[0]
        assert 3.95 <= slope <= 4.05

    def test_ground_state_vanishes(self, closed_params):
        assert qfi_vs_time(closed_params, AdiabaticSchedule(1e-2, 100.0), n=0) == 0.0

    def test_lambda_from_time_reproduces_eigenstate_form(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            n = int(rng.integers(50, 500))
            gamma = rng.uniform(1e-3, 1e-1)
            T = rng.uniform(1.0, 20.0) / (2 * gamma * 1.0)
            p = ClosedSystemParametersFactory(x_b=rng.uniform(0.5, 2.0))
            schedule = AdiabaticSchedule(gamma, T)
            from_time = qfi_vs_time(p, schedule, n, scaling=TimeScaling.LAMBDA_FROM_TIME)

            Lambda = math.sqrt(2.5 * (1 - 1 / (2 * gamma * p.omega_k * T) ** 2))
            q = p.replace(lam=Lambda / p.x_b)
            exact = eigenstate_qfi(EigenstateSpec.at(q, n), q)
            assert from_time == pytest.approx(exact, rel=2 / n)

    def test_time_too_short_for_any_coupling(self, closed_params):
        with pytest.raises(DomainError):
            qfi_vs_time(
                closed_params,
                AdiabaticSchedule(0.1, 1.0),
                n=10,
                scaling=TimeScaling.LAMBDA_FROM_TIME,
            )

    @pytest.mark.parametrize(("gamma", "T"), [(0.0, 1.0), (0.5, 0.0), (1.2, 3.0)])
    def test_schedule_validation(self, gamma, T):
        with pytest.raises(DomainError):
            AdiabaticSchedule(gamma, T)
