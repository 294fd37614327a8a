"""Exact computational witnesses for group orders, bounded generation,
amenability and circle dynamics."""

from ._gline import *  # noqa: F401,F403
from ._gline import __doc__  # noqa: F401
