"""Twinless strong connectivity and cut-pair counting."""

from ._core import *  # noqa: F401,F403
from ._core import GraphError, PreconditionError  # noqa: F401

__version__ = "0.1.0"
