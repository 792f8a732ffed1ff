"""
API sub-clients bound to a HypergraphSession.
"""

from .enumeration import EnumerationAPI
from .extension import ExtensionAPI
from .reductions import ReductionsAPI
from .reference import ReferenceAPI

__all__ = ["EnumerationAPI", "ExtensionAPI", "ReductionsAPI", "ReferenceAPI"]
