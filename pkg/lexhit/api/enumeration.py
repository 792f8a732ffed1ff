"""
Enumeration API client: streams, counts and benchmarks the minimal transversals.
"""

import itertools
import logging
from typing import TYPE_CHECKING, Iterator, List, Optional, Sequence

from ..core.enumeration import (
    LexEnumerator,
    enumerate_under_order,
    lex_largest_greedy,
    transversal_hypergraph,
    transversal_rank,
)
from ..core.hypergraph import rank
from ..exceptions import LexHitUsageError
from ..models.enumeration import EnumerationStats, RunReport
from ..models.hypergraph import OrderedHypergraph
from ..models.sets import VertexSet

if TYPE_CHECKING:
    from ..session import HypergraphSession

logger = logging.getLogger(__name__)


class EnumerationAPI:
    """Client for lex-ordered enumeration of the session's hypergraph."""

    def __init__(self, session: "HypergraphSession"):
        self._session = session

    def enumerator(self) -> LexEnumerator:
        """A fresh resumable enumerator; its ``stats`` stay readable after use."""
        return LexEnumerator(
            self._session.hypergraph, check_bounds=self._session.settings.check_bounds
        )

    def stream(self, limit: Optional[int] = None) -> Iterator[VertexSet]:
        """
        Yield minimal transversals in lex-ascending order.

        Args:
            limit: Stop after this many outputs (default: all)

        Raises:
            LexHitUsageError: If ``limit`` is negative
        """
        if limit is not None and limit < 0:
            raise LexHitUsageError(f"limit must be non-negative, got {limit}", {"limit": limit})
        return itertools.islice(self.enumerator(), limit)

    def all(self) -> List[VertexSet]:
        return list(self.enumerator())

    def lex_smallest(self) -> Optional[VertexSet]:
        """First output of the enumeration, or None when no transversal exists."""
        return next(self.enumerator(), None)

    def lex_largest(self) -> Optional[VertexSet]:
        """The lex-largest minimal transversal, computed greedily."""
        return lex_largest_greedy(self._session.hypergraph)

    def count(self) -> int:
        """Number of minimal transversals."""
        enumerator = self.enumerator()
        for _ in enumerator:
            pass
        return enumerator.stats.outputs

    def under_order(self, order: Sequence[str]) -> Iterator[VertexSet]:
        """
        Enumerate with the vertices ranked by ``order`` (vertex names, all of them).

        Raises:
            LexHitUsageError: If ``order`` is not a permutation of the vertex names
        """
        h = self._session.hypergraph
        ids = [h.index_of(name) for name in order]
        return enumerate_under_order(h, ids, check_bounds=self._session.settings.check_bounds)

    def transversal_hypergraph(self) -> OrderedHypergraph:
        return transversal_hypergraph(self._session.hypergraph)

    def transversal_rank(self) -> Optional[int]:
        return transversal_rank(self._session.hypergraph)

    def bench(self, repeat: int = 1) -> RunReport:
        """
        Run the full enumeration ``repeat`` times and summarise it.

        The node-delay, first-output and oracle-size bounds are always asserted here,
        whatever ``settings.check_bounds`` says.

        Raises:
            LexHitUsageError: If ``repeat`` is smaller than 1
            BoundViolationError: If an instrumented bound is exceeded
        """
        if repeat < 1:
            raise LexHitUsageError(f"repeat must be at least 1, got {repeat}", {"repeat": repeat})
        h = self._session.hypergraph
        runs: List[EnumerationStats] = []
        for _ in range(repeat):
            enumerator = LexEnumerator(h, check_bounds=True)
            for _ in enumerator:
                pass
            runs.append(enumerator.stats)
        report = RunReport.from_stats(h.n, h.m, rank(h), runs)
        logger.info(
            "bench: %d outputs, max node delay %d (limit %d), %d oracle calls",
            report.outputs,
            report.max_node_delay,
            report.node_delay_limit,
            report.oracle_calls,
        )
        return report
