"""
Lexicographic enumeration of all minimal transversals.

The search walks a binary decision tree in pre-order. Level ``d`` decides vertex ``d``;
the left child puts it into the solution, the right child excludes it. A child is only
entered when the extension oracle says its subtree holds a minimal transversal, so
every leaf reached is an output and outputs come out in ascending lex order.
"""

import logging
import time
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..models.enumeration import EnumerationStats, SearchNode
from ..models.hypergraph import OrderedHypergraph
from ..models.sets import VertexSet
from .extension import decide_masks
from .hypergraph import reorder, validate_order

logger = logging.getLogger(__name__)

_ENTER = 0
_RIGHT = 1


class LexEnumerator:
    """
    Resumable producer of the minimal transversals of ``h`` in lex-ascending order.

    The recursion is unrolled onto an explicit stack holding at most ``2n + 1`` frames.
    Work happens only inside ``__next__``, so a consumer that stops early pays for
    nothing past its last output. ``stats`` is live and final once ``stats.complete``.

    Example:
        enumerator = LexEnumerator(h)
        for solution in enumerator:
            print(solution.names(list(h.names)))
        print(enumerator.stats.outputs)
    """

    def __init__(
        self,
        h: OrderedHypergraph,
        check_bounds: bool = False,
        on_node: Optional[Callable[[SearchNode], None]] = None,
    ):
        """
        Args:
            h: The hypergraph to enumerate
            check_bounds: Raise BoundViolationError as soon as an instrumented bound fails
            on_node: Called with every visited decision-tree node, for tracing
        """
        self.hypergraph = h
        self.check_bounds = check_bounds
        self.on_node = on_node
        self.stats = EnumerationStats(n=h.n)
        self._masks = h.edge_masks()
        self._n = h.n
        self._stack: List[Tuple[int, int, int, int]] = [(_ENTER, 0, 0, 0)]
        self._last_output_at: Optional[float] = None

    def __iter__(self) -> "LexEnumerator":
        return self

    def _oracle(self, x: int, y: int) -> bool:
        verdict, tuples = decide_masks(
            self._masks, self._n, x, y, check_budgets=self.check_bounds
        )
        self.stats.record_oracle(bin(x).count("1"), tuples)
        return verdict

    def _trace(self, x: int, y: int, depth: int) -> None:
        if self.on_node is None:
            return
        n = self._n
        decided = (1 << depth) - 1
        self.on_node(
            SearchNode(
                include=VertexSet(n, x),
                exclude=VertexSet(n, y),
                remaining=VertexSet(n, ((1 << n) - 1) & ~decided),
                depth=depth,
            )
        )

    def __next__(self) -> VertexSet:
        if self._last_output_at is None:
            self._last_output_at = time.perf_counter()
        stack = self._stack
        n = self._n
        while stack:
            phase, x, y, depth = stack.pop()
            v = 1 << depth
            if phase == _RIGHT:
                if self._oracle(x, y | v):
                    stack.append((_ENTER, x, y | v, depth + 1))
                continue

            self.stats.record_node()
            self._trace(x, y, depth)
            # Children are checked before entry; the root has no parent to do it.
            if depth == 0 and not self._oracle(x, y):
                continue
            if depth == n:
                return self._emit(x)
            stack.append((_RIGHT, x, y, depth))
            if self._oracle(x | v, y):
                stack.append((_ENTER, x | v, y, depth + 1))

        self._finish()
        raise StopIteration

    def _emit(self, x: int) -> VertexSet:
        now = time.perf_counter()
        started = self._last_output_at if self._last_output_at is not None else now
        solution = VertexSet(self._n, x)
        self.stats.record_output(len(solution), now - started)
        self._last_output_at = now
        if self.check_bounds:
            self.stats.check_bounds()
        return solution

    def _finish(self) -> None:
        if self.stats.complete:
            return
        self.stats.complete = True
        if self.check_bounds:
            self.stats.check_bounds()
        logger.info(
            "enumeration finished: %d outputs, %d nodes, %d oracle calls",
            self.stats.outputs,
            self.stats.nodes_visited,
            self.stats.oracle_calls,
        )


def enumerate_transversals(
    h: OrderedHypergraph, check_bounds: bool = False
) -> Iterator[VertexSet]:
    """Yield every minimal transversal of ``h`` once, in lex-ascending order."""
    return LexEnumerator(h, check_bounds=check_bounds)


def lex_smallest(h: OrderedHypergraph) -> Optional[VertexSet]:
    """The lex-smallest minimal transversal, or None if ``h`` contains the empty edge."""
    return next(LexEnumerator(h), None)


def lex_largest_greedy(h: OrderedHypergraph) -> Optional[VertexSet]:
    """
    The lex-largest minimal transversal, found greedily.

    Starts from the whole universe and walks the order from the highest-precedence
    vertex down, dropping each one whenever the rest still hits every edge.
    """
    masks = h.edge_masks()
    if any(e == 0 for e in masks):
        return None
    current = (1 << h.n) - 1
    for v in range(h.n):
        candidate = current & ~(1 << v)
        if all(e & candidate for e in masks):
            current = candidate
    return VertexSet(h.n, current)


def enumerate_under_order(
    h: OrderedHypergraph, order: Sequence[int], check_bounds: bool = False
) -> Iterator[VertexSet]:
    """
    Enumerate as if the vertices were ranked ``order[0]`` first, ``order[1]`` next, ...

    Outputs are sets over the original vertex ids, in lex-ascending order under the
    given ranking.

    Raises:
        LexHitUsageError: If ``order`` is not a permutation of the vertex ids
    """
    order = validate_order(h, order)
    permuted = reorder(h, order)
    n = h.n
    return (
        VertexSet.of(n, (order[v] for v in solution))
        for solution in LexEnumerator(permuted, check_bounds=check_bounds)
    )


def lex_smallest_contains(h: OrderedHypergraph, x: VertexSet) -> bool:
    """
    Put ``x`` first in the vertex order and test whether the lex-smallest minimal
    transversal under that order contains ``x``.

    Agrees with ``extend_decide(h, x, ∅)``; slower, kept for cross-checking.
    """
    rest = [v for v in range(h.n) if v not in x]
    for first in enumerate_under_order(h, [*x, *rest]):
        return x.issubset(first)
    return False


def transversal_hypergraph(h: OrderedHypergraph) -> OrderedHypergraph:
    """Tr(h): the minimal transversals as the edges of a hypergraph on the same vertices."""
    return OrderedHypergraph(names=h.names, edges=tuple(LexEnumerator(h)))


def transversal_rank(h: OrderedHypergraph) -> Optional[int]:
    """Size of the largest minimal transversal, or None if there is none."""
    enumerator = LexEnumerator(h)
    for _ in enumerator:
        pass
    return enumerator.stats.observed_kstar
