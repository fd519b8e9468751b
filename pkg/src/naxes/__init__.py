"""Exact verification of axis-concurrence theorems for n-gons over Q and GF(p)."""

from .config import NgonConfig, center, derive, validate
from .kernel import GF, QQ, join, meet, point

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "NgonConfig", "center", "derive", "join", "meet", "point", "validate"]
