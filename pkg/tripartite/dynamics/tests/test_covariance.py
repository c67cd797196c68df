import numpy as np
import pytest

from tripartite.core.exceptions import StabilityError
from tripartite.core.frames import squeezed_frame
from tripartite.core.tests.factories import SystemParametersFactory
from tripartite.dynamics.covariance import diffusion_matrix
from tripartite.dynamics.covariance import lyapunov_oracle
from tripartite.dynamics.covariance import purity
from tripartite.dynamics.covariance import steady_covariance
from tripartite.dynamics.covariance import uncertainty_product
from tripartite.dynamics.drift import DriftModel
from tripartite.dynamics.drift import drift_model
from tripartite.dynamics.families import MechanicalFamily
from tripartite.dynamics.steady import steady_means


def random_stable_drift(rng):
    kappa = rng.uniform(0.5, 2.0)
    omega_m = rng.uniform(0.5, 2.0)
    omega = rng.uniform(-2.0, 0.7 * kappa**2 / omega_m)
    return DriftModel.from_rates(kappa, omega_m, omega)


class TestSteadyCovariance:
    def test_decoupled_point_is_vacuum(self):
        p = SystemParametersFactory(lam=0.0)
        frame = squeezed_frame(p)
        dm = drift_model(p, frame, steady_means(p))
        cov = steady_covariance(dm, p)
        assert np.array_equal(cov, np.diag([0.5, 0.5]))

    def test_matches_lyapunov_oracle(self, params):
        rng = np.random.default_rng(1)
        for _ in range(100):
            dm = random_stable_drift(rng)
            closed = steady_covariance(dm, params)
            numeric = lyapunov_oracle(dm, diffusion_matrix(dm.kappa_b))
            assert np.max(np.abs(closed - numeric)) < 1e-10

    def test_matches_oracle_through_the_pipeline(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            p = SystemParametersFactory(
                lam=rng.uniform(0.0, 40.0),
                drive=rng.uniform(0.0, 100.0),
                omega_p=rng.uniform(0.0, 0.3),
            )
            dm = drift_model(p, squeezed_frame(p), steady_means(p))
            if not dm.stable:
                continue
            assert np.allclose(
                steady_covariance(dm, p),
                lyapunov_oracle(dm, diffusion_matrix(p.kappa_b)),
                rtol=1e-9,
                atol=1e-10,
            )

    def test_uncertainty_relation(self, params):
        rng = np.random.default_rng(2)
        for _ in range(100):
            cov = steady_covariance(random_stable_drift(rng), params)
            assert np.allclose(cov, cov.T)
            assert np.all(np.linalg.eigvalsh(cov) > 0)
            assert uncertainty_product(cov) >= 0.25 * (1 - 1e-12)
            assert 0 < purity(cov) <= 1 + 1e-12

    def test_entries_diverge_as_inverse_gap(self, feasibility):
        scaled = []
        for ratio in (1e-2, 1e-3, 1e-4):
            family = MechanicalFamily.at_gap(feasibility, ratio)
            cov = steady_covariance(family.drift, family.parameters)
            scaled.append(cov * family.drift.Delta)
        assert np.allclose(scaled[1], scaled[2], rtol=1e-2)
        assert np.allclose(scaled[0], scaled[1], rtol=1e-1)

    def test_cross_correlation_vanishes_without_damping(self, params):
        values = [
            abs(steady_covariance(DriftModel.from_rates(k, 1.0, -0.5), params)[0, 1])
            for k in (1e-1, 1e-2, 1e-3)
        ]
        assert values == sorted(values, reverse=True)
        assert values[-1] < 1e-3

    def test_unstable_drift_raises(self, params):
        dm = DriftModel.from_rates(0.1, 1.0, 1.0)
        assert not dm.stable
        with pytest.raises(StabilityError):
            steady_covariance(dm, params)
        with pytest.raises(StabilityError):
            lyapunov_oracle(dm, diffusion_matrix(0.1))


class TestLyapunovOracle:
    def test_isotropic_damping(self):
        dm = DriftModel.from_rates(kappa_b=0.8, omega_m=0.0, omega_eff=0.0)
        assert np.allclose(dm.V, -0.8 * np.eye(2))
        cov = lyapunov_oracle(dm, 2 * 0.8 * 0.5 * np.eye(2))
        assert np.allclose(cov, 0.5 * np.eye(2), atol=1e-14)

    def test_decoupled_drift_reaches_vacuum(self):
        dm = DriftModel.from_rates(kappa_b=0.3, omega_m=1.5, omega_eff=-1.5)
        assert np.allclose(lyapunov_oracle(dm, diffusion_matrix(0.3)), 0.5 * np.eye(2))


def test_vacuum_purity():
    assert purity(0.5 * np.eye(2)) == 1.0
    assert uncertainty_product(np.diag([2.0, 0.5])) == 1.0
