from django.db import models
from django.utils.translation import gettext_lazy as _


class TimeScaling(models.TextChoices):
    """How Λ is obtained when the QFI is expressed through the sweep time."""

    FIXED_LAMBDA = "fixed_lambda", _("Λ held fixed")
    LAMBDA_FROM_TIME = "lambda_from_time", _("Λ from the adiabatic time")
