"""
With these settings, tests run faster.
"""

from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="test-only-M3qjVbT1yk5zq0o6S7cJfW2hNrD4eLxA9uGiKpZsYvBn8RaE",
)
# https://docs.djangoproject.com/en/dev/ref/settings/#test-runner
TEST_RUNNER = "django.test.runner.DiscoverRunner"

# torsionlab
# ------------------------------------------------------------------------------
TORSIONLAB.update(  # noqa F405
    {
        "SEED": 0,
        "FORMAT": "text",
        "RANDOM_TRIALS": 10,
        "CONJUGATORS": 5,
        "FACTOR_REPORTS": True,
    }
)
