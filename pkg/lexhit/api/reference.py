"""
Reference API client: brute-force ground truth and the verification harness.
"""

import logging
from typing import TYPE_CHECKING, List, Optional, Sequence

from ..core.enumeration import LexEnumerator
from ..core.hypergraph import lex_compare
from ..core.reference import bf_all_minimal_transversals, bf_extension
from ..exceptions import BoundViolationError
from ..models.enumeration import VerificationReport
from ..models.sets import Ordering, VertexSet

if TYPE_CHECKING:
    from ..session import HypergraphSession, SetLike

logger = logging.getLogger(__name__)


class ReferenceAPI:
    """Client for the brute-force oracles, capped by ``settings.bruteforce_cap``."""

    def __init__(self, session: "HypergraphSession"):
        self._session = session

    def _cap(self, cap: Optional[int]) -> int:
        return self._session.settings.bruteforce_cap if cap is None else cap

    def all_minimal_transversals(self, cap: Optional[int] = None) -> List[VertexSet]:
        """
        Every minimal transversal by exhaustive subset scan, lex-ascending.

        Raises:
            BruteForceCapError: If the hypergraph has more vertices than the cap
        """
        return bf_all_minimal_transversals(self._session.hypergraph, self._cap(cap))

    def extension(
        self, include: "SetLike", exclude: "SetLike" = None, cap: Optional[int] = None
    ) -> bool:
        q = self._session.extension.query(include, exclude)
        return bf_extension(q.hypergraph, q.include, q.exclude, self._cap(cap))

    def verify(
        self,
        cap: Optional[int] = None,
        expected: Optional[Sequence[VertexSet]] = None,
    ) -> VerificationReport:
        """
        Check the enumerator against brute force.

        Compares the two output lists and checks that the outputs are strictly
        lex-ascending. The enumerator runs with its bounds and oracle budgets armed, so
        a violation stops the run and is reported in ``bound_error``.

        Args:
            cap: Largest vertex count to brute-force (default: ``settings.bruteforce_cap``)
            expected: Reference list to compare against instead of the brute-force one

        Returns:
            VerificationReport; ``passed`` is true iff all three checks hold

        Raises:
            BruteForceCapError: If the hypergraph has more vertices than the cap
        """
        h = self._session.hypergraph
        reference = list(expected) if expected is not None else self.all_minimal_transversals(cap)

        produced: List[VertexSet] = []
        bound_error = None
        try:
            for solution in LexEnumerator(h, check_bounds=True):
                produced.append(solution)
        except BoundViolationError as e:
            # The comparison below then runs on the outputs produced so far.
            bound_error = e.message
            logger.warning("verify stopped after %d outputs: %s", len(produced), e.message)

        first_mismatch = None
        for position, (left, right) in enumerate(zip(produced, reference)):
            if left != right:
                first_mismatch = position
                break
        if first_mismatch is None and len(produced) != len(reference):
            first_mismatch = min(len(produced), len(reference))

        ordered = all(
            lex_compare(left, right) == Ordering.SMALLER
            for left, right in zip(produced, produced[1:])
        )

        report = VerificationReport(
            n=h.n,
            m=h.m,
            expected=len(reference),
            produced=len(produced),
            equal=first_mismatch is None,
            ordered=ordered,
            bounds_ok=bound_error is None,
            bound_error=bound_error,
            first_mismatch=first_mismatch,
        )
        logger.info("verify n=%d m=%d: %s", h.n, h.m, "pass" if report.passed else "FAIL")
        return report
