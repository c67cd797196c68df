import math

import numpy as np
import pytest

from tripartite.closed.eigenstate import EigenstateSpec
from tripartite.closed.eigenstate import critical_qfi_scan
from tripartite.closed.eigenstate import eigenstate_qfi
from tripartite.core.choices import Phase
from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import PhaseError
from tripartite.core.frames import phase_point
from tripartite.core.frames import squeezed_frame
from tripartite.core.tests.factories import ClosedSystemParametersFactory


class TestEigenstateQFI:
    def test_zero_displacement_carries_no_information(self):
        p = ClosedSystemParametersFactory(x_b=0.0, g0=0.4)
        assert eigenstate_qfi(EigenstateSpec.at(p, 3), p) == 0.0

    def test_closed_form(self):
        p = ClosedSystemParametersFactory(lam=0.3)
        # Λ_c² = 2.5, Λ² = 0.09
        expected = 0.09 * 1 / (2 * (2.5 - 0.09) ** 2)
        assert eigenstate_qfi(EigenstateSpec.at(p, 0), p) == pytest.approx(expected, rel=1e-14)

    def test_heisenberg_scaling(self):
        p = ClosedSystemParametersFactory(lam=0.8)
        ns = np.array([100, 1000, 10000])
        qfi = [eigenstate_qfi(EigenstateSpec.at(p, int(n)), p) for n in ns]
        slope = np.polyfit(np.log(ns), np.log(qfi), 1)[0]
        assert 1.95 <= slope <= 2.05

    def test_moderate_n_ratios_approach_square(self):
        p = ClosedSystemParametersFactory(lam=0.8)
        qfi = {n: eigenstate_qfi(EigenstateSpec.at(p, n), p) for n in (10, 20, 40)}
        assert math.log(qfi[40] / qfi[20]) / math.log(2) == pytest.approx(2.0, rel=0.05)
        assert math.log(qfi[20] / qfi[10]) / math.log(2) == pytest.approx(2.0, rel=0.05)

    def test_symmetric_under_joint_sign_flip(self):
        a = ClosedSystemParametersFactory(lam=0.6, x_b=1.3)
        b = ClosedSystemParametersFactory(lam=0.6, x_b=-1.3)
        assert phase_point(b, squeezed_frame(b)).Lambda == -phase_point(a, squeezed_frame(a)).Lambda
        assert eigenstate_qfi(EigenstateSpec.at(a, 2), a) == eigenstate_qfi(EigenstateSpec.at(b, 2), b)

    def test_critical_point_returns_sentinel(self):
        p = ClosedSystemParametersFactory(lam=math.sqrt(10.0) / 2)
        spec = EigenstateSpec.at(p, 1)
        assert spec.phase_point.phase == Phase.CRITICAL
        assert eigenstate_qfi(spec, p) == math.inf

    def test_superradiant_spec_rejected(self):
        with pytest.raises(PhaseError):
            EigenstateSpec.at(ClosedSystemParametersFactory(lam=3.0), 0)

    @pytest.mark.parametrize("n", [-1, 1.5, True])
    def test_invalid_label(self, n):
        with pytest.raises(DomainError):
            EigenstateSpec.at(ClosedSystemParametersFactory(), n)

    def test_cramer_rao_bound_is_inverse_square_root(self):
        p = ClosedSystemParametersFactory(lam=1.1)
        qfi = eigenstate_qfi(EigenstateSpec.at(p, 5), p)
        bound = 1 / math.sqrt(qfi)
        assert bound**2 * qfi == pytest.approx(1.0)


class TestCriticalScan:
    def test_scan_between_critical_positions(self):
        p = ClosedSystemParametersFactory(lam=0.5)
        point = phase_point(p, squeezed_frame(p))
        xs = np.linspace(point.x_minus, point.x_plus, 11)
        scan = critical_qfi_scan(p, xs, n=2)

        assert scan[0].qfi == math.inf
        assert scan[-1].qfi == math.inf
        assert scan[0].phase == Phase.CRITICAL
        assert scan[-1].phase == Phase.CRITICAL
        interior = [s.qfi for s in scan[1:-1]]
        assert all(math.isfinite(q) for q in interior)
        centre = len(interior) // 2
        assert interior[centre] == 0.0
        assert interior[centre:] == sorted(interior[centre:])
        assert interior[: centre + 1] == sorted(interior[: centre + 1], reverse=True)

    def test_superradiant_points_are_nan(self):
        p = ClosedSystemParametersFactory(lam=0.5)
        scan = critical_qfi_scan(p, [10.0], n=0)
        assert scan[0].phase == Phase.SUPERRADIANT
        assert math.isnan(scan[0].qfi)
