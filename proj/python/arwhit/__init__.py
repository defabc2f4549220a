"""Archimedean Whittaker functions, local L-factors and zeta pairings."""

from ._arwhit import *  # noqa: F401,F403
from ._arwhit import __version__  # noqa: F401
