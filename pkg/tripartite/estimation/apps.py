from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class EstimationConfig(AppConfig):
    name = "tripartite.estimation"
    verbose_name = _("Gaussian estimation")
