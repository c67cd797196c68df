# core/hierarchy.py
import logging
from dataclasses import dataclass

from .parameters import SystemParameters

logger = logging.getLogger(__name__)

DEFAULT_HIERARCHY_FACTOR = 10.0

# (label, larger, smaller)
HIERARCHY_LINKS = (
    ("omega_nv >> omega_k", "omega_nv", "omega_k"),
    ("omega_k >> omega_m", "omega_k", "omega_m"),
    ("kappa_a >> kappa_b", "kappa_a", "kappa_b"),
    ("kappa_sigma >> kappa_b", "kappa_sigma", "kappa_b"),
)


@dataclass(frozen=True)
class HierarchyWarning:
    link: str
    ratio: float
    factor: float

    def __str__(self):
        return f"{self.link} violated: ratio {self.ratio:.4g} < {self.factor:g}"


def validate_hierarchy(p: SystemParameters, factor: float = DEFAULT_HIERARCHY_FACTOR):
    """Return one warning per time-scale link whose ratio falls short of ``factor``."""
    warnings = []
    for label, larger, smaller in HIERARCHY_LINKS:
        ratio = getattr(p, larger) / getattr(p, smaller)
        if ratio < factor:
            warning = HierarchyWarning(link=label, ratio=ratio, factor=factor)
            logger.warning(str(warning))
            warnings.append(warning)
    return warnings
