"""
Data models for the lexhit package.
"""

from .sets import *
from .hypergraph import *
from .extension import *
from .families import *
from .circuits import *
from .enumeration import *

__all__ = [
    # Set models
    "VertexSet",
    "Ordering",
    # Hypergraph models
    "OrderedHypergraph",
    "TransversalRecord",
    "MinimalityFailure",
    "FailureReason",
    "RestrictedHypergraph",
    # Extension models
    "ExtensionQuery",
    "WitnessSystems",
    "WitnessMode",
    "OracleVerdict",
    "VerdictReason",
    "OracleStats",
    "ExtensionResult",
    # Independent Family models
    "MultiColouredInstance",
    "SingleColouredInstance",
    "FamilySolution",
    "EmitKind",
    # Circuit models
    "Gate",
    "GateKind",
    "Weft3Circuit",
    "Antimonotone3NFormula",
    # Enumeration models
    "SearchNode",
    "EnumerationStats",
    "RunReport",
    "VerificationReport",
]
