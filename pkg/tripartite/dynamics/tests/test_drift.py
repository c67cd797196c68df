import cmath
import math

import numpy as np
import pytest

from tripartite.core.choices import FormulaMode
from tripartite.core.frames import squeezed_frame
from tripartite.core.tests.factories import SystemParametersFactory
from tripartite.dynamics.drift import DriftModel
from tripartite.dynamics.drift import critical_lambda
from tripartite.dynamics.drift import drift_model
from tripartite.dynamics.drift import effective_frequency
from tripartite.dynamics.drift import lambda_for_gap
from tripartite.dynamics.steady import steady_means


def build(p, mode=FormulaMode.CORRECTED):
    frame = squeezed_frame(p)
    return drift_model(p, frame, steady_means(p), mode)


class TestDriftModel:
    def test_decoupled_damped_oscillator(self):
        p = SystemParametersFactory(lam=0.0)
        dm = build(p)
        assert dm.omega_eff == -p.omega_m
        assert dm.stable
        assert dm.Delta == pytest.approx(p.kappa_b**2 + p.omega_m**2)
        assert dm.eigenvalues[0] == pytest.approx(complex(-p.kappa_b, p.omega_m))
        assert dm.eigenvalues[1] == pytest.approx(complex(-p.kappa_b, -p.omega_m))
        assert dm.tau == pytest.approx(1 / p.kappa_b)

    def test_zero_effective_frequency(self):
        dm = DriftModel.from_rates(kappa_b=0.7, omega_m=2.0, omega_eff=0.0)
        assert dm.tau == pytest.approx(1 / 0.7)

    def test_characteristic_time_definition(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            kappa, omega_m = rng.uniform(0.2, 2.0, size=2)
            omega = rng.uniform(0.01, 0.99) * kappa**2 / omega_m
            dm = DriftModel.from_rates(kappa, omega_m, omega)
            assert dm.stable
            assert dm.tau * (kappa - math.sqrt(omega_m * omega)) == pytest.approx(1.0, rel=1e-9)

    def test_eigenvalues_match_numerics(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            kappa, omega_m = rng.uniform(0.2, 2.0, size=2)
            omega = rng.uniform(-3.0, 3.0)
            dm = DriftModel.from_rates(kappa, omega_m, omega)
            numeric = sorted(np.linalg.eigvals(dm.V), key=lambda z: (z.real, z.imag))
            analytic = sorted(dm.eigenvalues, key=lambda z: (z.real, z.imag))
            assert np.allclose(numeric, analytic, rtol=1e-12, atol=1e-12)
            assert dm.stable == all(z.real < 0 for z in numeric)

    def test_time_diverges_towards_gap(self, feasibility):
        frame = squeezed_frame(feasibility)
        means = steady_means(feasibility)
        taus = []
        for ratio in (1e-1, 1e-2, 1e-3, 1e-4):
            dm = DriftModel.from_rates(
                feasibility.kappa_b,
                feasibility.omega_m,
                effective_frequency(
                    feasibility.replace(lam=lambda_for_gap(feasibility, frame, means, ratio)),
                    frame,
                    means,
                ),
                delta=ratio * feasibility.kappa_b**2,
            )
            taus.append(dm.tau)
        assert taus == sorted(taus)
        assert taus[-1] > 1e3 * taus[0]

    def test_beyond_the_gap_is_unstable(self, feasibility):
        frame = squeezed_frame(feasibility)
        lam = 1.01 * critical_lambda(feasibility, frame, steady_means(feasibility))
        dm = build(feasibility.replace(lam=lam))
        assert not dm.stable
        assert math.isnan(dm.tau)
        assert max(z.real for z in dm.eigenvalues) > 0

    def test_critical_lambda_closes_the_gap(self, feasibility):
        frame = squeezed_frame(feasibility)
        means = steady_means(feasibility)
        lam = critical_lambda(feasibility, frame, means)
        dm = build(feasibility.replace(lam=lam))
        assert abs(dm.Delta) < 1e-9 * feasibility.omega_m**2
        # 537 Hz for the feasibility drive and squeezing
        assert lam / (2 * math.pi) == pytest.approx(537.0, rel=1e-2)

    def test_feasibility_point_is_stable(self, feasibility):
        dm = build(feasibility)
        assert dm.stable
        assert dm.diagnostics == ()

    def test_hierarchy_diagnostics_are_attached(self):
        p = SystemParametersFactory(omega_k=1.0, omega_m=1.0)
        dm = build(p)
        assert [w.link for w in dm.diagnostics] == ["omega_k >> omega_m"]

    def test_strict_mode_drops_squeezing_enhancement(self, feasibility):
        frame = squeezed_frame(feasibility)
        means = steady_means(feasibility)
        corrected = effective_frequency(feasibility, frame, means) + feasibility.omega_m
        strict = effective_frequency(feasibility, frame, means, FormulaMode.STRICT_PAPER)
        assert corrected == pytest.approx(
            (strict + feasibility.omega_m) * math.exp(2 * frame.r), rel=1e-12,
        )

    def test_undriven_system_never_reaches_the_gap(self):
        p = SystemParametersFactory(drive=0.0)
        assert critical_lambda(p, squeezed_frame(p), steady_means(p)) == math.inf

    def test_complex_root_below_threshold(self):
        dm = DriftModel.from_rates(0.5, 1.0, -4.0)
        assert dm.eigenvalues[0] == pytest.approx(-0.5 + cmath.sqrt(-4.0))
