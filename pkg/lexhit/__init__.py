"""
lexhit

Enumerates the minimal hitting sets of a hypergraph in lexicographic order, decides
the extension problem, and builds the reductions to Independent Family problems,
weft-3 circuits and antimonotone formulas.
"""

import logging

from .config import Settings
from .exceptions import (
    BoundViolationError,
    BruteForceCapError,
    LexHitError,
    LexHitParseError,
    LexHitUsageError,
)
from .models import *
from .session import HypergraphSession

logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.1.0"
__all__ = [
    "HypergraphSession",
    "Settings",
    "LexHitError",
    "LexHitUsageError",
    "LexHitParseError",
    "BruteForceCapError",
    "BoundViolationError",
]
