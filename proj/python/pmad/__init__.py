"""Power Maxwell distribution toolkit (C++ core)."""

from ._pmad import *  # noqa: F401,F403
from ._pmad import __doc__  # noqa: F401

__version__ = "0.1.0"
