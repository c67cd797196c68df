from django.db import models
from django.utils.translation import gettext_lazy as _


class Phase(models.TextChoices):
    NORMAL = "normal", _("Normal")
    SUPERRADIANT = "superradiant", _("Superradiant")
    CRITICAL = "critical", _("Critical")


class FormulaMode(models.TextChoices):
    """
    Which rendition of the ambiguous formulas to evaluate.

    ``corrected`` keeps the squeezing enhancement in the effective frequency, the
    exact near-critical prefactors and the exact number variance. ``strict_paper``
    reproduces the printed expressions verbatim.
    """

    CORRECTED = "corrected", _("Corrected")
    STRICT_PAPER = "strict_paper", _("Strict (as printed)")
