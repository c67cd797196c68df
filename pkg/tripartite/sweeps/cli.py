# sweeps/cli.py
"""Options shared by the sweep management commands."""

from django.conf import settings

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import ConfigError
from tripartite.core.exceptions import DomainError
from tripartite.core.parameters import SystemParameters

from .config import PARAMETER_FIELDS
from .config import SETTING_KEYS
from .config import SweepConfig
from .config import parse_overrides
from .config import read_config_file
from .forms import SweepConfigForm
from .presets import PRESETS
from .presets import preset_values
from .runner import BACKENDS


def add_parameter_arguments(parser):
    parser.add_argument("--preset", choices=sorted(PRESETS), help="Load a canonical parameter set")
    parser.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override one configuration value (frequencies in Hz); repeatable",
    )


def add_sweep_arguments(parser):
    add_parameter_arguments(parser)
    parser.add_argument("--config", help="Flat key=value configuration file")
    parser.add_argument("--axis", help="param:lo:hi:n[:log]")
    parser.add_argument("--outputs", help="Comma-separated quantity names")
    parser.add_argument("--mode", choices=FormulaMode.values)
    parser.add_argument("--jobs", type=int, default=settings.TRIPARTITE_SWEEP_JOBS)
    parser.add_argument("--backend", choices=BACKENDS, default=settings.TRIPARTITE_SWEEP_BACKEND)


def _checked_overrides(pairs):
    overrides = parse_overrides(pairs)
    unknown = [key for key in overrides if key not in PARAMETER_FIELDS and key not in SETTING_KEYS]
    if unknown:
        raise ConfigError("Unknown override keys", {"set": unknown})
    return overrides


def config_from_options(options) -> SweepConfig:
    """Configuration file first, then explicit flags, then ``--set`` overrides."""
    data = {}
    if options.get("config"):
        data.update(read_config_file(options["config"]))
    for key in ("preset", "axis", "outputs", "mode"):
        if options.get(key):
            data[key] = options[key]
    data.update(_checked_overrides(options.get("set")))
    return SweepConfigForm.build(data)


def parameters_from_options(options) -> SystemParameters:
    values = preset_values(options["preset"]) if options.get("preset") else {}
    overrides = _checked_overrides(options.get("set"))
    values.update({key: value for key, value in overrides.items() if key in PARAMETER_FIELDS})
    try:
        return SystemParameters.from_hz(**{key: float(value) for key, value in values.items()})
    except (TypeError, ValueError) as e:
        raise ConfigError("Invalid parameter point", {"parameters": [str(e)]}) from e
    except DomainError as e:
        raise ConfigError("Invalid parameter point", {"parameters": [str(e)]}) from e
