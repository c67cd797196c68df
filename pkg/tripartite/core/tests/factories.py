from factory import Factory
from factory import LazyAttribute

from tripartite.core.parameters import GeometryParameters
from tripartite.core.parameters import SystemParameters


class SystemParametersFactory(Factory[SystemParameters]):
    """A generic, stable, normal-phase point in rad/s."""

    omega_k = 10.0
    omega_m = 1.0
    omega_nv = 100.0
    lam = 0.3
    g0 = 0.0
    omega_p = 0.0
    kappa_a = 5.0
    kappa_b = 0.5
    kappa_sigma = 5.0
    drive = 1.0
    x_b = 1.0

    class Meta:
        model = SystemParameters


class ClosedSystemParametersFactory(SystemParametersFactory):
    """ω_NV = 10, ω_K = 1, so Λ_c = sqrt(10)/2."""

    omega_k = 1.0
    omega_nv = 10.0
    omega_m = 1e-3


class GeometryParametersFactory(Factory[GeometryParameters]):
    """A micron-scale YIG sphere with an NV centre just outside it."""

    g_e = 2.0
    mu_B = 9.2740100783e-24
    mu_0 = 1.25663706212e-6
    gamma_gyro = 1.76085963e11
    M_s = 1.4e5
    R = 1e-6
    r0 = LazyAttribute(lambda o: 1.5 * o.R)
    M_eff = 1e-17
    omega_m = 2e4 * 3.141592653589793

    class Meta:
        model = GeometryParameters
