"""
With these settings, tests run faster.
"""

from .base import *  # noqa: F403
from .base import LOGGING
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="Jc0vH4kq2R3dSx9PqYw1mZ7nLb8TtA6uFgE5oKiVr2yNhD0sWjXcQeUlMaB3pGf",
)
# https://docs.djangoproject.com/en/dev/ref/settings/#test-runner
TEST_RUNNER = "django.test.runner.DiscoverRunner"

# LOGGING
# ------------------------------------------------------------------------------
LOGGING["loggers"]["tripartite"]["level"] = "WARNING"  # type: ignore[index]

# Celery
# ------------------------------------------------------------------------------
CELERY_BROKER_URL = "memory://"
CELERY_RESULT_BACKEND = "cache+memory://"
# Your stuff...
# ------------------------------------------------------------------------------
