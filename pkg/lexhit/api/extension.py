"""
Extension API client: decides whether a partial solution extends to a minimal transversal.
"""

import logging
from typing import TYPE_CHECKING, Union

from ..core.enumeration import lex_smallest_contains
from ..core.extension import build_witness_systems, extend_decide
from ..models.extension import (
    ExtensionQuery,
    ExtensionResult,
    OracleVerdict,
    WitnessMode,
    WitnessSystems,
)

if TYPE_CHECKING:
    from ..session import HypergraphSession, SetLike

logger = logging.getLogger(__name__)


class ExtensionAPI:
    """Client for extension queries against the session's hypergraph."""

    def __init__(self, session: "HypergraphSession"):
        self._session = session

    def query(self, include: "SetLike", exclude: "SetLike" = None) -> ExtensionQuery:
        """
        Build a validated query from names or vertex sets.

        Args:
            include: Vertices the minimal transversal must contain
            exclude: Vertices it must avoid (default: none)

        Returns:
            ExtensionQuery over the session's hypergraph

        Raises:
            LexHitUsageError: If a name is unknown or the two sets overlap
        """
        return ExtensionQuery.build(
            self._session.hypergraph,
            self._session.vertex_set(include),
            self._session.vertex_set(exclude),
        )

    def decide(
        self,
        include: "SetLike",
        exclude: "SetLike" = None,
        mode: WitnessMode = WitnessMode.UNPUNCTURED,
    ) -> ExtensionResult:
        """
        Decide the query, asserting the disjointness and tuple budgets when
        ``settings.check_bounds`` is on.

        Raises:
            LexHitUsageError: If the query is invalid
            BoundViolationError: If a budget is exceeded
        """
        q = self.query(include, exclude)
        result = extend_decide(q, mode, check_budgets=self._session.settings.check_bounds)
        logger.debug(
            "extend include=%s exclude=%s -> %s",
            self._session.names(q.include),
            self._session.names(q.exclude),
            result.value,
        )
        return result

    def witness_systems(
        self,
        include: "SetLike",
        exclude: "SetLike" = None,
        mode: WitnessMode = WitnessMode.UNPUNCTURED,
    ) -> Union[WitnessSystems, OracleVerdict]:
        return build_witness_systems(self.query(include, exclude), mode)

    def lex_smallest_contains(self, include: "SetLike") -> bool:
        """Order-based cross-check of ``decide(include)``."""
        return lex_smallest_contains(self._session.hypergraph, self._session.vertex_set(include))
