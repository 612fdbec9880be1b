"""Discrete-round simulator of M-GEAR and LEACH clustered WSN routing."""

from ._mgearsim import *  # noqa: F401,F403
from ._mgearsim import __version__  # noqa: F401
