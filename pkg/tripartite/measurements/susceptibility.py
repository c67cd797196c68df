# measurements/susceptibility.py
import logging
import math
from dataclasses import dataclass

from tripartite.core.exceptions import ConvergenceError
from tripartite.core.exceptions import DomainError
from tripartite.estimation.derivatives import default_step
from tripartite.estimation.states import GaussianState

from .moments import DEFAULT_MAX_ORDER
from .moments import MomentEngine
from .moments import decoupled_moment
from .operators import MeasurementOp
from .propagation import expectation_derivative

logger = logging.getLogger(__name__)

DEFAULT_LADDER = (1e-3, 1e-4, 1e-5)
SPREAD_TOLERANCE = 5e-2
SPREAD_FLOOR = 1e-6
ADDITIVITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SusceptibilityResult:
    value: float
    ladder: tuple[float, ...]
    estimates: tuple[float, ...]
    extrapolations: tuple[float, ...]
    cross_covariance: float
    additive: bool


def _trivial(value=0.0):
    return SusceptibilityResult(
        value=value,
        ladder=(),
        estimates=(),
        extrapolations=(),
        cross_covariance=0.0,
        additive=True,
    )


def _ladder_scale(v, c, r):
    """
    Divisor for the ε ladder.

    Normalised, the bracket is q(ε) = [a + ε(b − a)] / D(ε) with a = 2(c − r),
    b = v − r² and D = 1 + 2ε(c − 1) + ε²(1 − 2c + v). The divisor keeps the
    expansion of 1/D convergent and bounds the second- and third-order
    coefficients of q against |a|, so the Richardson residue stays far below
    the value being extrapolated.
    """
    a, b = 2.0 * (c - r), v - r * r
    s = 2.0 * abs(c - 1.0) + math.sqrt(abs(1.0 - 2.0 * c + v))
    reference = max(abs(a), SPREAD_FLOOR)
    scale = max(1.0, math.sqrt(max(v, 0.0)), abs(c), abs(r), s)
    for n in (2, 3):
        bound = n * abs(b - a) * s ** (n - 1) + (n + 1) * abs(a) * s**n
        scale = max(scale, (bound / reference) ** (1.0 / n))
    return scale


def noise_susceptibility(
    P_M: MeasurementOp,
    N_M: MeasurementOp,
    state_fn,
    lam: float,
    h: float | None = None,
    ladder=DEFAULT_LADDER,
    max_order: int = DEFAULT_MAX_ORDER,
) -> SusceptibilityResult:
    """
    χ = lim_{ε→0} (1/ε)·[1 − δ²λ|_P / δ²λ|_{(1−ε)P + εN}].

    The bracket is evaluated in factored form,
    [2(1−ε)(C d_P² − V_P d_P d_N) + ε(V_N d_P² − V_P d_N²)] / (Var_ε d_P²),
    with Var_ε the exact variance of the mixture, on a ladder scaled to the
    curvature of the bracket; two Richardson steps must agree.
    """
    if len(ladder) < 2 or any(b >= a for a, b in zip(ladder, ladder[1:])):
        raise DomainError(f"ε ladder must decrease over at least two rungs, got {ladder!r}")
    perfect, noise = P_M.polynomial(), N_M.polynomial()
    if perfect == noise:
        return _trivial()
    if h is None:
        h = default_step(state_fn, lam)

    engine = MomentEngine(state_fn(lam), max_order)
    V_P = engine.variance(perfect)
    V_N = engine.variance(noise)
    C = engine.covariance(perfect, noise)
    d_P = expectation_derivative(perfect, state_fn, lam, h, max_order)
    d_N = expectation_derivative(noise, state_fn, lam, h, max_order)
    if d_P == 0 or V_P <= 0:
        raise DomainError("the perfect measurement has no finite precision here")

    additive = abs(C) <= ADDITIVITY_TOLERANCE * math.sqrt(max(V_P * V_N, 0.0))
    if not additive:
        logger.info(f"Mixture variance is not additive: Cov(P, N) = {C:.6e}")

    scale = _ladder_scale(V_N / V_P, C / V_P, d_N / d_P)
    epsilons = tuple(eps / scale for eps in ladder)

    A = d_P * (C * d_P - V_P * d_N)
    B = (V_N * d_P) * d_P - (V_P * d_N) * d_N

    estimates = []
    for eps in epsilons:
        var_eps = engine.variance(MeasurementOp.mixture(P_M, N_M, eps).polynomial())
        estimates.append((2.0 * (1.0 - eps) * A + eps * B) / (var_eps * d_P**2))

    extrapolations = tuple(
        (ratio * fine - coarse) / (ratio - 1.0)
        for ratio, coarse, fine in zip(
            (a / b for a, b in zip(epsilons, epsilons[1:])), estimates, estimates[1:],
        )
    )
    value = extrapolations[-1]
    spread = abs(extrapolations[0] - extrapolations[-1])
    if spread > SPREAD_TOLERANCE * abs(value) and spread > SPREAD_FLOOR:
        raise ConvergenceError(
            f"susceptibility ladder does not settle: {extrapolations}",
        )
    return SusceptibilityResult(
        value=float(value),
        ladder=epsilons,
        estimates=tuple(estimates),
        extrapolations=extrapolations,
        cross_covariance=C,
        additive=additive,
    )


def anharmonic_susceptibility_closed_form(zeta: float, st: GaussianState, dndlambda: float) -> float:
    """ζ·(2 + 8n − (2n³ + 2n²)/(∂n/∂λ)) with n = ⟨b†b⟩, as printed."""
    if dndlambda == 0:
        raise DomainError("the mean phonon number does not depend on λ")
    n = MomentEngine(st).expectation(MeasurementOp.intensity()).real
    return zeta * (2.0 + 8.0 * n - (2.0 * n**3 + 2.0 * n**2) / dndlambda)


def anharmonic_susceptibility_decoupled(zeta: float, state_fn, lam: float, h=None) -> float:
    """
    Susceptibility to ζ(b†b)² with ⟨(b†b)³⟩ taken from the three-operator
    decoupling relation; every other moment is exact.

    It falls short of the exact value by 2ζκ₃/Var(b†b), κ₃ being the third
    cumulant of the phonon number.
    """
    intensity = MeasurementOp.intensity()
    noise = MeasurementOp.anharmonic(zeta)
    state = state_fn(lam)
    engine = MomentEngine(state)
    n = intensity.polynomial()
    mean = engine.expectation(n).real
    second = engine.expectation(n * n).real
    variance = engine.variance(n)
    if variance <= 0:
        raise DomainError("the perfect measurement has no finite precision here")
    third = decoupled_moment([intensity, intensity, intensity], state).real
    cross = zeta * (third - mean * second + variance)
    d_P = expectation_derivative(intensity, state_fn, lam, h)
    d_N = expectation_derivative(noise, state_fn, lam, h)
    if d_P == 0:
        raise DomainError("the mean phonon number does not depend on λ")
    return 2.0 * (cross * d_P - variance * d_N) / (variance * d_P)


@dataclass(frozen=True)
class AnharmonicComparison:
    zeta: float
    exact: float
    decoupled: float
    closed_form: float
    mean_number: float

    @property
    def relative_discrepancy(self):
        reference = max(abs(self.exact), abs(self.closed_form))
        return abs(self.exact - self.closed_form) / reference if reference else 0.0


def compare_anharmonic(zeta: float, state_fn, lam: float, h=None) -> AnharmonicComparison:
    """Exact Isserlis susceptibility to ζ(b†b)² next to the decoupled and printed forms."""
    intensity = MeasurementOp.intensity()
    state = state_fn(lam)
    dn = expectation_derivative(intensity, state_fn, lam, h)
    exact = noise_susceptibility(intensity, MeasurementOp.anharmonic(zeta), state_fn, lam, h).value
    comparison = AnharmonicComparison(
        zeta=zeta,
        exact=exact,
        decoupled=anharmonic_susceptibility_decoupled(zeta, state_fn, lam, h),
        closed_form=anharmonic_susceptibility_closed_form(zeta, state, dn),
        mean_number=MomentEngine(state).expectation(intensity).real,
    )
    if comparison.relative_discrepancy > 0.1:
        logger.warning(
            f"Anharmonic susceptibility: exact {exact:.6g} vs factorised {comparison.closed_form:.6g}",
        )
    return comparison
