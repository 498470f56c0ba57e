"""Shared test configuration.

Property tests drive real numerical evaluation, so per-example wall time
varies too much for hypothesis's default deadline; disable it once here.
"""
from hypothesis import settings

settings.register_profile("mzr", deadline=None)
settings.load_profile("mzr")
