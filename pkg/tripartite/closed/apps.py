from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class ClosedConfig(AppConfig):
    name = "tripartite.closed"
    verbose_name = _("Closed-system QFI")
