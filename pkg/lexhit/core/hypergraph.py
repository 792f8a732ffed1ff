"""
Primitive predicates on ordered hypergraphs: lex order, hitting, minimality, restriction.
"""

import functools
import logging
from typing import Any, Callable, List, Sequence, Union

from ..exceptions import LexHitUsageError
from ..models.hypergraph import (
    FailureReason,
    MinimalityFailure,
    OrderedHypergraph,
    RestrictedHypergraph,
    TransversalRecord,
)
from ..models.sets import Ordering, VertexSet

logger = logging.getLogger(__name__)


def lex_compare(s: VertexSet, t: VertexSet) -> Ordering:
    """
    Compare two sets lexicographically.

    ``s`` is smaller when the highest-precedence (lowest-index) vertex of the
    symmetric difference belongs to ``s``.

    Raises:
        LexHitUsageError: If the sets live in universes of different sizes
    """
    if s.n != t.n:
        raise LexHitUsageError(
            f"cannot compare sets over universes of size {s.n} and {t.n}",
            {"left": s.n, "right": t.n},
        )
    diff = s.bits ^ t.bits
    if not diff:
        return Ordering.EQUAL
    return Ordering.SMALLER if s.bits & diff & -diff else Ordering.LARGER


def _cmp(s: VertexSet, t: VertexSet) -> int:
    order = lex_compare(s, t)
    return -1 if order == Ordering.SMALLER else (0 if order == Ordering.EQUAL else 1)


lex_key: Callable[[VertexSet], Any] = functools.cmp_to_key(_cmp)


def lex_sorted(sets: Sequence[VertexSet]) -> List[VertexSet]:
    """Sort sets into lexicographically ascending order."""
    return sorted(sets, key=lex_key)


def is_hitting_set(h: OrderedHypergraph, s: VertexSet) -> bool:
    """True iff ``s`` meets every edge; vacuously true without edges."""
    if s.n != h.n:
        raise LexHitUsageError(f"set over {s.n} vertices, hypergraph has {h.n}")
    bits = s.bits
    return all(edge.bits & bits for edge in h.edges)


def check_minimal(
    h: OrderedHypergraph, s: VertexSet
) -> Union[TransversalRecord, MinimalityFailure]:
    """
    Decide minimality by looking for a witness edge per member.

    A hitting set is minimal iff every member ``x`` has an edge meeting the set in
    exactly ``{x}``; the first such edge in input order is recorded.

    Returns:
        TransversalRecord on success, MinimalityFailure naming a missed edge or an
        expendable vertex otherwise
    """
    if s.n != h.n:
        raise LexHitUsageError(f"set over {s.n} vertices, hypergraph has {h.n}")
    bits = s.bits
    witnesses = {}
    for index, edge in enumerate(h.edges):
        common = edge.bits & bits
        if not common:
            return MinimalityFailure(reason=FailureReason.NOT_HITTING, edge=index)
        if common & (common - 1) == 0:
            witnesses.setdefault(common.bit_length() - 1, index)
    for v in s:
        if v not in witnesses:
            return MinimalityFailure(reason=FailureReason.EXPENDABLE, vertex=v)
    return TransversalRecord(set=s, witnesses=dict(sorted(witnesses.items())))


def is_minimal_transversal(h: OrderedHypergraph, s: VertexSet) -> bool:
    return isinstance(check_minimal(h, s), TransversalRecord)


def restrict(h: OrderedHypergraph, y: VertexSet) -> RestrictedHypergraph:
    """
    Delete the vertices of ``y`` from the universe and from every edge.

    Surviving vertices keep their relative order and are renumbered densely; edges
    that become equal are merged and edges that become empty are kept.
    """
    if y.n != h.n:
        raise LexHitUsageError(f"set over {y.n} vertices, hypergraph has {h.n}")
    kept = [v for v in range(h.n) if v not in y]
    new_id = {old: new for new, old in enumerate(kept)}
    edges = [[new_id[v] for v in edge if v in new_id] for edge in h.edges]
    restricted = OrderedHypergraph.from_edges([h.names[v] for v in kept], edges)
    logger.debug(
        "restricted %d -> %d vertices, %d -> %d edges", h.n, restricted.n, h.m, restricted.m
    )
    return RestrictedHypergraph(hypergraph=restricted, original_ids=tuple(kept), original_n=h.n)


def rank(h: OrderedHypergraph) -> int:
    """Largest edge cardinality; 0 for a hypergraph without edges."""
    return max((len(edge) for edge in h.edges), default=0)


def validate_order(h: OrderedHypergraph, order: Sequence[int]) -> List[int]:
    """
    Check that ``order`` lists every vertex id exactly once.

    Raises:
        LexHitUsageError: If ``order`` is not a permutation of the vertex ids
    """
    order = list(order)
    if sorted(order) != list(range(h.n)):
        raise LexHitUsageError(
            f"order must be a permutation of 0..{h.n - 1}, got {order}", {"order": order}
        )
    return order


def reorder(h: OrderedHypergraph, order: Sequence[int]) -> OrderedHypergraph:
    """
    Renumber vertices so that ``order[0]`` becomes vertex 0, ``order[1]`` vertex 1, ...

    Raises:
        LexHitUsageError: If ``order`` is not a permutation of the vertex ids
    """
    order = validate_order(h, order)
    position = {old: new for new, old in enumerate(order)}
    return OrderedHypergraph.from_edges(
        [h.names[v] for v in order],
        ([position[v] for v in edge] for edge in h.edges),
    )
