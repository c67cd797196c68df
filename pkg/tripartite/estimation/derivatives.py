# estimation/derivatives.py
"""
Finite-difference stencils on realised steps.

Every stencil divides by the distance between the floating-point abscissae it
actually evaluated, not by the nominal step.
"""

import numpy as np

DEFAULT_RELATIVE_STEP = 1e-6


def default_step(state_fn, x: float) -> float:
    step = getattr(state_fn, "step", None)
    if callable(step):
        return step(x)
    return DEFAULT_RELATIVE_STEP * (abs(x) or 1.0)


def central_difference(f, x, h):
    lo, hi = x - h, x + h
    return (np.asarray(f(hi)) - np.asarray(f(lo))) / (hi - lo), (hi - lo) / 2.0


def one_sided_difference(f, x, h, f0=None):
    """Second-order forward difference through x, x + h, x + 2h."""
    x1, x2 = x + h, x + 2.0 * h
    h1, h2 = x1 - x, x2 - x
    f0 = np.asarray(f(x)) if f0 is None else f0
    return (
        -(h1 + h2) / (h1 * h2) * f0
        + h2 / (h1 * (h2 - h1)) * np.asarray(f(x1))
        - h1 / (h2 * (h2 - h1)) * np.asarray(f(x2))
    )


def richardson_difference(f, x, h):
    """Central differences at h and h/2 combined to cancel the O(h²) term."""
    coarse, h1 = central_difference(f, x, h)
    fine, h2 = central_difference(f, x, h / 2.0)
    return (h1**2 * fine - h2**2 * coarse) / (h1**2 - h2**2)


def disagree(a: float, b: float, tolerance: float, floor: float = 0.0) -> bool:
    gap = abs(a - b)
    return gap > tolerance * max(abs(a), abs(b)) and gap > floor
