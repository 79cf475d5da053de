"""Exact multi vector spaces over Q and GF(p)."""

from ._mvspace import *  # noqa: F401,F403
from ._mvspace import __doc__  # noqa: F401
