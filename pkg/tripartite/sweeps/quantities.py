# sweeps/quantities.py
"""
Output columns of a sweep.

Each quantity is evaluated on a ``RowContext`` and records which formula
variants make it depend on the formula mode:

    V1  effective frequency (squeezing enhancement kept or dropped)
    V2  near-critical QFI prefactors
    V3  intensity-measurement variance
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property

from tripartite.closed.adiabatic import adiabatic_time
from tripartite.closed.eigenstate import EigenstateSpec
from tripartite.closed.eigenstate import eigenstate_qfi
from tripartite.core.exceptions import StabilityError
from tripartite.core.frames import phase_point
from tripartite.core.frames import squeezed_frame
from tripartite.core.hierarchy import validate_hierarchy
from tripartite.dynamics.covariance import purity as covariance_purity
from tripartite.dynamics.families import MechanicalFamily
from tripartite.dynamics.steady import steady_means
from tripartite.estimation.gaussian import gaussian_qfi
from tripartite.estimation.near_critical import near_critical_qfi
from tripartite.estimation.near_critical import precision_bound
from tripartite.measurements.operators import MeasurementOp
from tripartite.measurements.propagation import error_propagation
from tripartite.measurements.propagation import expectation_derivative
from tripartite.measurements.propagation import intensity_precision_closed_form
from tripartite.measurements.susceptibility import anharmonic_susceptibility_closed_form
from tripartite.measurements.susceptibility import anharmonic_susceptibility_decoupled
from tripartite.measurements.susceptibility import noise_susceptibility

from .config import GAP_RATIO
from .config import SweepConfig

logger = logging.getLogger(__name__)


class RowContext:
    """Lazily built physics for one grid point; every piece is computed at most once."""

    def __init__(self, config: SweepConfig, value: float):
        self.config = config
        self.value = value
        if config.axis.param == GAP_RATIO:
            self.family = MechanicalFamily.at_gap(config.point(value), value, config.mode)
            self.parameters = self.family.parameters
        else:
            self.parameters = config.point(value)
            self.family = MechanicalFamily.from_parameters(self.parameters, config.mode)

    @property
    def lam(self):
        return self.parameters.lam

    @cached_property
    def frame(self):
        return squeezed_frame(self.parameters)

    @cached_property
    def phase_point(self):
        return phase_point(self.parameters, self.frame, self.config.critical_tolerance)

    @cached_property
    def drift(self):
        return self.family.drift_at(
            self.lam, validate_hierarchy(self.parameters, self.config.hierarchy_factor),
        )

    def require_stable(self):
        if not self.drift.stable:
            raise StabilityError(f"no steady state at λ = {self.lam!r} rad/s")
        return self.drift

    @cached_property
    def gaussian_qfi(self):
        self.require_stable()
        return gaussian_qfi(self.family, self.lam)

    def susceptibility(self, noise: MeasurementOp):
        self.require_stable()
        return noise_susceptibility(MeasurementOp.intensity(), noise, self.family, self.lam).value


@dataclass(frozen=True)
class Quantity:
    name: str
    evaluate: object
    variants: tuple[str, ...] = ()


QUANTITIES: dict[str, Quantity] = {}


def quantity(name, variants=()):
    def register(fn):
        QUANTITIES[name] = Quantity(name=name, evaluate=fn, variants=tuple(variants))
        return fn

    return register


@quantity("xi")
def xi(ctx: RowContext):
    return ctx.phase_point.xi


@quantity("qfi_closed")
def qfi_closed(ctx: RowContext):
    spec = EigenstateSpec(n=ctx.config.fock_n, phase_point=ctx.phase_point, frame=ctx.frame)
    return eigenstate_qfi(spec, ctx.parameters)


@quantity("adiabatic_time")
def preparation_time(ctx: RowContext):
    return adiabatic_time(
        ctx.parameters,
        ctx.phase_point.Lambda,
        ctx.config.gamma_ad,
        ctx.config.critical_tolerance,
    )


@quantity("omega_eff", variants=("V1",))
def omega_eff(ctx: RowContext):
    return ctx.drift.omega_eff


@quantity("delta", variants=("V1",))
def delta(ctx: RowContext):
    return ctx.drift.Delta


@quantity("tau", variants=("V1",))
def tau(ctx: RowContext):
    return ctx.require_stable().tau


@quantity("purity", variants=("V1",))
def purity(ctx: RowContext):
    ctx.require_stable()
    return covariance_purity(ctx.family.steady_state(ctx.lam).cov)


@quantity("qfi_gaussian", variants=("V1",))
def qfi_gaussian(ctx: RowContext):
    return ctx.gaussian_qfi


@quantity("qfi_near_critical", variants=("V1", "V2"))
def qfi_near_critical(ctx: RowContext):
    dm = ctx.require_stable()
    return near_critical_qfi(ctx.parameters, ctx.frame, dm, ctx.config.mode).delta_form


@quantity("precision_crb", variants=("V1",))
def precision_crb(ctx: RowContext):
    if ctx.gaussian_qfi == 0:
        return math.inf
    return precision_bound(ctx.gaussian_qfi)


@quantity("precision_intensity", variants=("V1",))
def precision_intensity(ctx: RowContext):
    ctx.require_stable()
    return error_propagation(
        MeasurementOp.intensity(), ctx.family, ctx.lam, tolerance=ctx.config.null_tolerance,
    ).value


@quantity("precision_intensity_closed", variants=("V1", "V3"))
def precision_intensity_closed(ctx: RowContext):
    dm = ctx.require_stable()
    return intensity_precision_closed_form(
        dm, ctx.family.covariance(ctx.lam), ctx.parameters, ctx.frame, ctx.config.mode,
    )


@quantity("chi_coherent", variants=("V1",))
def chi_coherent(ctx: RowContext):
    return ctx.susceptibility(MeasurementOp.coherent_drive(ctx.config.coherent_order))


@quantity("chi_anharmonic", variants=("V1",))
def chi_anharmonic(ctx: RowContext):
    return ctx.susceptibility(MeasurementOp.anharmonic(ctx.config.zeta))


@quantity("chi_anharmonic_closed", variants=("V1",))
def chi_anharmonic_closed(ctx: RowContext):
    ctx.require_stable()
    dn = expectation_derivative(MeasurementOp.intensity(), ctx.family, ctx.lam)
    return anharmonic_susceptibility_closed_form(ctx.config.zeta, ctx.family(ctx.lam), dn)


@quantity("chi_anharmonic_decoupled", variants=("V1",))
def chi_anharmonic_decoupled(ctx: RowContext):
    ctx.require_stable()
    return anharmonic_susceptibility_decoupled(ctx.config.zeta, ctx.family, ctx.lam)
