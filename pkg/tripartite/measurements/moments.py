# measurements/moments.py
import logging
import math
from dataclasses import dataclass

import numpy as np

from tripartite.core.exceptions import ArityError
from tripartite.core.exceptions import DomainError
from tripartite.core.exceptions import OrderError
from tripartite.estimation.states import GaussianState

from .operators import MeasurementOp
from .operators import NormalOrdered

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 8


def _as_polynomial(op):
    return op.polynomial() if isinstance(op, MeasurementOp) else op


class MomentEngine:
    """
    Exact moments of a one-mode Gaussian state (Isserlis/Wick).

    With b = β + δb, N = ⟨δb†δb⟩ and M = ⟨δbδb⟩, a normal-ordered moment is

        ⟨b†ᵏ bˡ⟩ = Σ k! l! M*ᵖ Mᵠ Nˢ β*ᵏ⁻²ᵖ⁻ˢ βˡ⁻²ᵠ⁻ˢ / (s! (k−s−2p)! 2ᵖ p! (l−s−2q)! 2ᵠ q!)

    Covariances are taken over the fluctuations δb, so a large mean never
    enters them through a difference of raw moments.
    """

    def __init__(self, state: GaussianState, max_order: int = DEFAULT_MAX_ORDER):
        if max_order < DEFAULT_MAX_ORDER or max_order % 2:
            raise DomainError(f"max_order must be an even integer ≥ 8, got {max_order!r}")
        self.state = state
        self.max_order = max_order
        c = state.cov
        self.N = 0.5 * (c[0, 0] + c[1, 1]) - 0.5
        self.M = complex(0.5 * (c[0, 0] - c[1, 1]), c[0, 1])
        self.beta = complex(state.mean[0], state.mean[1]) / math.sqrt(2.0)
        self._cache: dict[tuple[int, int, bool], complex] = {}

    def _check_order(self, k, l):
        if k + l > self.max_order:
            raise OrderError(f"moment of order {k + l} exceeds max_order {self.max_order}")

    def normal_moment(self, k: int, l: int) -> complex:
        return self._moment(k, l, central=False)

    def central_moment(self, k: int, l: int) -> complex:
        """⟨δb†ᵏ δbˡ⟩."""
        return self._moment(k, l, central=True)

    def _moment(self, k, l, central):
        self._check_order(k, l)
        key = (k, l, central)
        if key not in self._cache:
            beta = 0j if central else self.beta
            self._cache[key] = sum(
                (weight * product for weight, product in self._terms(k, l, beta)),
                start=0j,
            )
        return self._cache[key]

    def _factors(self, beta):
        return (self.M.conjugate(), self.M, complex(self.N), beta.conjugate(), beta)

    def _terms(self, k, l, beta, tangent=None):
        """(weight, value) per pairing; with ``tangent`` the value is its directional derivative."""
        factors = self._factors(beta)
        for s in range(min(k, l) + 1):
            for p in range((k - s) // 2 + 1):
                left = k - s - 2 * p
                for q in range((l - s) // 2 + 1):
                    right = l - s - 2 * q
                    weight = (
                        math.factorial(k)
                        * math.factorial(l)
                        / (
                            math.factorial(s)
                            * math.factorial(left)
                            * 2**p
                            * math.factorial(p)
                            * math.factorial(right)
                            * 2**q
                            * math.factorial(q)
                        )
                    )
                    powers = (p, q, s, left, right)
                    if tangent is None:
                        value = 1 + 0j
                        for x, e in zip(factors, powers):
                            value *= x**e
                    else:
                        value = 0j
                        for i, (dx, e) in enumerate(zip(tangent, powers)):
                            if not e or not dx:
                                continue
                            part = e * dx * factors[i] ** (e - 1)
                            for j, (x, f) in enumerate(zip(factors, powers)):
                                if j != i:
                                    part *= x**f
                            value += part
                    yield weight, value

    def expectation(self, op) -> complex:
        poly = _as_polynomial(op)
        return sum(
            (c * self.normal_moment(k, l) for (k, l), c in poly.terms.items()),
            start=0j,
        )

    def expectation_derivative(self, op, d_mean, d_cov) -> complex:
        """Exact d⟨O⟩ along a tangent (∂mean, ∂cov) of the state."""
        poly = _as_polynomial(op)
        d_cov = np.asarray(d_cov, dtype=float)
        dN = 0.5 * (d_cov[0, 0] + d_cov[1, 1])
        dM = complex(0.5 * (d_cov[0, 0] - d_cov[1, 1]), d_cov[0, 1])
        d_beta = complex(d_mean[0], d_mean[1]) / math.sqrt(2.0)
        tangent = (dM.conjugate(), dM, complex(dN), d_beta.conjugate(), d_beta)
        total = 0j
        for (k, l), c in poly.terms.items():
            self._check_order(k, l)
            total += c * sum(
                (weight * value for weight, value in self._terms(k, l, self.beta, tangent)),
                start=0j,
            )
        return total

    def _fluctuation(self, poly):
        """``poly`` written in δb, with its constant part dropped."""
        shifted = poly.displaced(self.beta)
        return shifted - shifted.terms.get((0, 0), 0)

    def _central_expectation(self, poly):
        return sum(
            (c * self.central_moment(k, l) for (k, l), c in poly.terms.items()),
            start=0j,
        )

    def covariance(self, a, b) -> float:
        """Symmetrised covariance ½⟨AB + BA⟩ − ⟨A⟩⟨B⟩ of Hermitian operators."""
        a, b = _as_polynomial(a), _as_polynomial(b)
        if not (a.is_hermitian() and b.is_hermitian()):
            raise DomainError("covariances are defined here for Hermitian operators only")
        if a.order + b.order > self.max_order:
            raise OrderError(
                f"covariance needs order {a.order + b.order}, above max_order {self.max_order}",
            )
        a, b = self._fluctuation(a), self._fluctuation(b)
        symmetric = 0.5 * (self._central_expectation(a * b) + self._central_expectation(b * a))
        mean_product = self._central_expectation(a) * self._central_expectation(b)
        return float((symmetric - mean_product).real)

    def variance(self, a) -> float:
        return self.covariance(a, a)


def expectation(op: MeasurementOp, st: GaussianState, max_order: int = DEFAULT_MAX_ORDER) -> float:
    """⟨O⟩ for a Hermitian measurement operator."""
    value = MomentEngine(st, max_order).expectation(op)
    if abs(value.imag) > 1e-9 * max(1.0, abs(value.real)):
        logger.warning(f"Expectation of {op.kind} has imaginary part {value.imag:.3e}")
    return float(value.real)


@dataclass(frozen=True)
class DecouplingReport:
    approximate: complex
    exact: complex

    @property
    def residual(self):
        return abs(self.approximate - self.exact)


def decoupled_moment(ops, st: GaussianState, max_order: int = DEFAULT_MAX_ORDER) -> complex:
    """
    Third- and fourth-order moments through the factorised decoupling relations.

    Pairwise moments ⟨AB⟩ keep operator order and are evaluated exactly.
    """
    ops = [_as_polynomial(op) for op in ops]
    engine = MomentEngine(st, max_order)
    first = [engine.expectation(op) for op in ops]

    def pair(i, j):
        return engine.expectation(ops[i] * ops[j])

    match len(ops):
        case 3:
            a, b, c = first
            return pair(0, 1) * c + a * pair(1, 2) + pair(0, 2) * b - 2 * a * b * c
        case 4:
            a, b, c, d = first
            return (
                pair(0, 1) * pair(2, 3)
                + pair(0, 3) * pair(1, 2)
                + pair(0, 2) * pair(1, 3)
                - 2 * a * b * c * d
            )
    raise ArityError(f"decoupling relations exist for 3 or 4 operators, got {len(ops)}")


def decoupling_report(ops, st: GaussianState, max_order: int = DEFAULT_MAX_ORDER):
    """Decoupled moment next to the exact ordered product."""
    approximate = decoupled_moment(ops, st, max_order)
    product = NormalOrdered.identity()
    for op in ops:
        product = product * _as_polynomial(op)
    exact = MomentEngine(st, max_order).expectation(product)
    return DecouplingReport(approximate=approximate, exact=exact)
