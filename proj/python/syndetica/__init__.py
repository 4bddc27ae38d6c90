"""Exact finite-window workbench: integer-set largeness detectors,
polynomial return sets, and subshift constructions."""

from ._syndetica import *  # noqa: F401,F403
from ._syndetica import __version__  # noqa: F401
