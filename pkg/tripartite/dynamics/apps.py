from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class DynamicsConfig(AppConfig):
    name = "tripartite.dynamics"
    verbose_name = _("Open dynamics")
