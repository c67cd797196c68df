from django.db import models
from django.utils.translation import gettext_lazy as _


class MeasurementKind(models.TextChoices):
    INTENSITY = "intensity", _("Intensity b†b")
    QUADRATURE = "quadrature", _("Quadrature e^{iθ}b + e^{−iθ}b†")
    COHERENT_DRIVE = "coherent_drive", _("Coherent drive b†ʲ + bʲ")
    ANHARMONIC = "anharmonic", _("Anharmonic ζ(b†b)²")
    MIXTURE = "mixture", _("Mixture (1−ε)P + εN")
