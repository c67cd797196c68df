import contextlib

from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class SweepsConfig(AppConfig):
    name = "tripartite.sweeps"
    verbose_name = _("Sweeps")

    def ready(self):
        with contextlib.suppress(ImportError):
            import tripartite.sweeps.signals  # noqa: F401
