"""
Main entry point of the lexhit package.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from .api.enumeration import EnumerationAPI
from .api.extension import ExtensionAPI
from .api.reductions import ReductionsAPI
from .api.reference import ReferenceAPI
from .config import Settings
from .formats.hypergraph import load_hypergraph, parse_hypergraph
from .models.hypergraph import OrderedHypergraph
from .models.sets import VertexSet
from .utils.helpers import parse_name_list, resolve_names

logger = logging.getLogger(__name__)

SetLike = Union[VertexSet, str, Iterable[str], None]


class HypergraphSession:
    """
    One hypergraph plus the settings every operation on it runs with.

    Operations are grouped into sub-clients (enumeration, extension, reductions,
    reference).

    Example:
        with HypergraphSession.from_file("h.txt", bruteforce_cap=16) as session:
            for solution in session.enumeration.stream(limit=10):
                print(" ".join(session.names(solution)))

            session.extension.decide(include="a", exclude="b").value
    """

    def __init__(
        self,
        hypergraph: OrderedHypergraph,
        settings: Optional[Settings] = None,
        **overrides: object,
    ):
        """
        Initialize the session.

        Args:
            hypergraph: The hypergraph all operations act on
            settings: Base settings (default: read from ``LEXHIT_*`` environment variables)
            **overrides: Settings fields that take precedence over ``settings``

        Raises:
            LexHitUsageError: If the environment or an override holds an invalid value
        """
        base = settings if settings is not None else Settings.from_env()
        self.settings = base.with_overrides(**overrides)
        self.hypergraph = hypergraph

        self.enumeration = EnumerationAPI(self)
        self.extension = ExtensionAPI(self)
        self.reductions = ReductionsAPI(self)
        self.reference = ReferenceAPI(self)
        logger.debug(
            "session opened: n=%d m=%d settings=%s",
            hypergraph.n,
            hypergraph.m,
            self.settings.model_dump(),
        )

    @classmethod
    def from_file(
        cls,
        path: Union[str, Path],
        settings: Optional[Settings] = None,
        minimize_edges: bool = False,
        **overrides: object,
    ) -> "HypergraphSession":
        """
        Load a hypergraph file and open a session on it.

        Args:
            path: File in the hypergraph text format
            settings: Base settings
            minimize_edges: Drop edges that are proper supersets of other edges first
            **overrides: Settings fields that take precedence over ``settings``

        Raises:
            LexHitUsageError: If the file does not exist
            LexHitParseError: If the file is malformed
        """
        h = load_hypergraph(path)
        if minimize_edges:
            h = h.minimize()
        return cls(h, settings, **overrides)

    @classmethod
    def from_text(
        cls, text: str, settings: Optional[Settings] = None, **overrides: object
    ) -> "HypergraphSession":
        return cls(parse_hypergraph(text), settings, **overrides)

    def vertex_set(self, value: SetLike) -> VertexSet:
        """
        Coerce a set given as a VertexSet, a name list string or an iterable of names.

        Raises:
            LexHitUsageError: On an unknown name or a set over another universe
        """
        if value is None:
            return VertexSet.empty(self.hypergraph.n)
        if isinstance(value, VertexSet):
            # Intersecting with the universe rejects a set over another universe.
            return self.hypergraph.universe() & value
        if isinstance(value, str):
            value = parse_name_list(value)
        return resolve_names(self.hypergraph, value)

    def names(self, vs: VertexSet) -> List[str]:
        """Member names of ``vs`` in precedence order."""
        return vs.names(list(self.hypergraph.names))

    def close(self) -> None:
        logger.debug("session closed")

    def __enter__(self) -> "HypergraphSession":
        """Context manager entry."""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Context manager exit."""
        self.close()
