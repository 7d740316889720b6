"""Exact reduction theory for lattices over orders in division algebras."""

from ._ordlat import *  # noqa: F401,F403
from ._ordlat import OrdlatError, ParseError, ScaleLimitExceeded  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
