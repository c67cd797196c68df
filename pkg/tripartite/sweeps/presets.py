# sweeps/presets.py
"""Canonical parameter sets, in ordinary frequencies (Hz)."""

from tripartite.core.exceptions import ConfigError
from tripartite.core.parameters import SystemParameters

FEASIBILITY = {
    "kappa_a": 1e7,
    "kappa_b": 1.0,
    "kappa_sigma": 1e3,
    "omega_m": 1e4,
    "omega_nv": 1e10,
    "omega_k": 1e9,
    # choices below the published values: a stable point short of the gap
    "omega_p": 1e4 / 3,
    "drive": 1e13,
    "lam": 300.0,
    "g0": 1e3,
    "x_b": 1.0,
}

PRESETS = {
    "feasibility": FEASIBILITY,
}


def preset_values(name: str) -> dict:
    try:
        return dict(PRESETS[name])
    except KeyError:
        raise ConfigError(
            f"Unknown preset {name!r}",
            {"preset": [f"choose one of {', '.join(sorted(PRESETS))}"]},
        ) from None


def feasibility_parameters() -> SystemParameters:
    return SystemParameters.from_hz(**FEASIBILITY)
