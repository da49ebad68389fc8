"""
Settings for the installed ``torsionlab`` command: runtime dependencies only.
"""

from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="cli-only-b7Hs2QmX9eLk4WzT1nRcV6pJ0yUaG3dF8oKiE5tNqYhM",
)
