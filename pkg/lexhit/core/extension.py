"""
Extension oracle: can a vertex set be extended to a minimal transversal avoiding another?

The oracle classifies every edge by how it meets the include set X. Edges meeting X in
exactly one vertex x are candidate witnesses for x, edges missing X are forbidden, and
edges meeting X twice or more are ignored. X extends iff one candidate per include vertex
can be chosen whose union leaves every forbidden edge partly uncovered.
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..exceptions import BoundViolationError
from ..models.extension import (
    ExtensionQuery,
    ExtensionResult,
    OracleStats,
    OracleVerdict,
    VerdictReason,
    WitnessMode,
    WitnessSystems,
)
from ..models.families import MultiColouredInstance
from ..models.hypergraph import OrderedHypergraph
from ..models.sets import VertexSet
from .hypergraph import restrict

logger = logging.getLogger(__name__)


def _classify(
    edge_masks: Sequence[int], x: int, y: int, punctured: bool
) -> Tuple[Dict[int, List[Tuple[int, int]]], List[Tuple[int, int]]]:
    """Split edges into per-vertex candidates and forbidden sets as (mask, edge index)."""
    systems: Dict[int, List[Tuple[int, int]]] = {}
    bits = x
    while bits:
        low = bits & -bits
        systems[low] = []
        bits ^= low
    forbidden: List[Tuple[int, int]] = []
    for index, e in enumerate(edge_masks):
        common = e & x
        if not common:
            forbidden.append((e & ~y, index))
        elif common & (common - 1) == 0:
            candidate = e & ~y
            if punctured:
                candidate &= ~common
            systems[common].append((candidate, index))
    return systems, forbidden


def _search(
    lists: Sequence[Sequence[int]], forbidden: Sequence[int]
) -> Tuple[Optional[Tuple[int, ...]], int]:
    """
    Try candidate tuples in odometer order until one covers no forbidden set.

    Returns:
        The positions of the first good tuple (or None) and the number of tuples tested
    """
    tuples = 0
    positions = [range(len(lst)) for lst in lists]
    for choice in itertools.product(*positions):
        tuples += 1
        union = 0
        for lst, position in zip(lists, choice):
            union |= lst[position]
        if all(t & ~union for t in forbidden):
            return choice, tuples
    return None, tuples


def _check_budget(stats: OracleStats) -> None:
    used = sum(stats.system_sizes) + stats.forbidden_size
    if used > stats.edge_count:
        raise BoundViolationError("disjointness-budget", used, stats.edge_count)
    if stats.system_sizes and stats.tuples_examined > stats.product_size():
        raise BoundViolationError("tuple-budget", stats.tuples_examined, stats.product_size())


def decide_masks(
    edge_masks: Sequence[int],
    n: int,
    x: int,
    y: int,
    check_budgets: bool = False,
) -> Tuple[bool, int]:
    """
    Bitmask fast path of :func:`extend_decide` used by the enumerator.

    Returns:
        The verdict and the number of candidate tuples examined
    """
    if not x:
        available = ((1 << n) - 1) & ~y
        return all(e & available for e in edge_masks), 0
    systems, forbidden = _classify(edge_masks, x, y, punctured=False)
    lists = [[mask for mask, _ in candidates] for candidates in systems.values()]
    if any(not lst for lst in lists):
        return False, 0
    if not forbidden:
        return True, 0
    choice, tuples = _search(lists, [mask for mask, _ in forbidden])
    if check_budgets:
        _check_budget(
            OracleStats(
                tuples_examined=tuples,
                system_sizes=[len(lst) for lst in lists],
                forbidden_size=len(forbidden),
                edge_count=len(edge_masks),
            )
        )
    return choice is not None, tuples


def _witness_systems(q: ExtensionQuery, mode: WitnessMode) -> WitnessSystems:
    n = q.hypergraph.n
    systems, forbidden = _classify(
        q.hypergraph.edge_masks(), q.include.bits, q.exclude.bits, mode == WitnessMode.PUNCTURED
    )
    return WitnessSystems(
        include_order=tuple(q.include),
        systems=tuple(tuple(VertexSet(n, mask) for mask, _ in c) for c in systems.values()),
        system_origins=tuple(tuple(index for _, index in c) for c in systems.values()),
        forbidden=tuple(VertexSet(n, mask) for mask, _ in forbidden),
        forbidden_origins=tuple(index for _, index in forbidden),
        mode=mode,
    )


def _preprocess(
    q: ExtensionQuery, mode: WitnessMode
) -> Tuple[Optional[WitnessSystems], Optional[OracleVerdict]]:
    if not q.include:
        available = q.exclude.complement().bits
        hitting = all(e & available for e in q.hypergraph.edge_masks())
        reason = (
            VerdictReason.EMPTY_INCLUDE_HITTING
            if hitting
            else VerdictReason.EMPTY_INCLUDE_NOT_HITTING
        )
        return None, OracleVerdict(value=hitting, reason=reason)
    ws = _witness_systems(q, mode)
    for vertex, system in zip(ws.include_order, ws.systems):
        if not system:
            verdict = OracleVerdict(
                value=False, reason=VerdictReason.MISSING_WITNESS, vertex=vertex
            )
            return ws, verdict
    if not ws.forbidden:
        return ws, OracleVerdict(value=True, reason=VerdictReason.NO_FORBIDDEN)
    return ws, None


def build_witness_systems(
    q: ExtensionQuery, mode: WitnessMode = WitnessMode.UNPUNCTURED
) -> Union[WitnessSystems, OracleVerdict]:
    """
    Run the preprocessing of the extension oracle.

    Args:
        q: The query
        mode: Store candidates as whole edges or with their include vertex removed

    Returns:
        OracleVerdict when preprocessing already decides the query (empty include set,
        an include vertex without candidates, or no forbidden edges), else the systems
    """
    ws, verdict = _preprocess(q, mode)
    if verdict is not None:
        return verdict
    assert ws is not None
    return ws


def extend_decide(
    q: ExtensionQuery,
    mode: WitnessMode = WitnessMode.UNPUNCTURED,
    check_budgets: bool = True,
) -> ExtensionResult:
    """
    Decide whether ``q.include`` extends to a minimal transversal avoiding ``q.exclude``.

    Stops at the first good candidate tuple, so the stats describe the work done.

    Raises:
        BoundViolationError: If ``check_budgets`` is set and a budget is exceeded
    """
    ws, verdict = _preprocess(q, mode)
    stats = OracleStats(edge_count=q.hypergraph.m)
    if ws is not None:
        stats.system_sizes = ws.system_sizes()
        stats.forbidden_size = len(ws.forbidden)

    if verdict is not None:
        logger.debug("extension decided in preprocessing: %s", verdict.reason.value)
        if check_budgets:
            _check_budget(stats)
        return ExtensionResult(value=verdict.value, stats=stats, early=verdict)

    assert ws is not None
    lists = [[s.bits for s in system] for system in ws.systems]
    choice, stats.tuples_examined = _search(lists, [t.bits for t in ws.forbidden])
    if check_budgets:
        _check_budget(stats)
    logger.debug(
        "extension |X|=%d sizes=%s |T|=%d tuples=%d -> %s",
        len(q.include),
        stats.system_sizes,
        stats.forbidden_size,
        stats.tuples_examined,
        choice is not None,
    )
    return ExtensionResult(value=choice is not None, stats=stats)


def reduce_to_mcif(
    q: ExtensionQuery, mode: WitnessMode = WitnessMode.UNPUNCTURED
) -> MultiColouredInstance:
    """
    Translate an extension query into an equivalent Multicoloured Independent Family.

    One colour per include vertex (in precedence order) holds its candidate witness
    edges; the forbidden sets are the edges missing the include set. All sets are over
    the universe with the excluded vertices removed. Degenerate queries (empty include
    set, or an include vertex without candidates) map to the fixed constant instances.
    """
    if not q.include:
        verdict = build_witness_systems(q, mode)
        assert isinstance(verdict, OracleVerdict)
        return MultiColouredInstance.constant(verdict.value)

    ws = _witness_systems(q, mode)
    if any(not system for system in ws.systems):
        return MultiColouredInstance.constant(False)

    restricted = restrict(q.hypergraph, q.exclude)
    position = {old: new for new, old in enumerate(restricted.original_ids)}
    n = restricted.hypergraph.n

    def project(s: VertexSet) -> VertexSet:
        return VertexSet.of(n, (position[v] for v in s))

    inst = MultiColouredInstance(
        names=restricted.hypergraph.names,
        colours=tuple(tuple(project(s) for s in system) for system in ws.systems),
        forbidden=tuple(project(t) for t in ws.forbidden),
    )
    logger.debug("reduced extension query to k=%d colours, |T|=%d", inst.k, len(inst.forbidden))
    return inst


def mcif_to_extension(inst: MultiColouredInstance) -> ExtensionQuery:
    """
    Build an extension query whose punctured reduction is ``inst``.

    A fresh vertex ``x_i`` is added per colour; the edges are the forbidden sets and
    every ``S ∪ {x_i}`` for ``S`` in colour ``i``; the include set is all fresh vertices.
    """
    taken = set(inst.names)
    fresh = []
    for i in range(1, inst.k + 1):
        name = f"x{i}"
        while name in taken:
            name += "'"
        taken.add(name)
        fresh.append(name)

    base = inst.universe_size
    edges: List[List[int]] = [list(t) for t in inst.forbidden]
    for i, colour in enumerate(inst.colours):
        edges.extend([*s, base + i] for s in colour)
    h = OrderedHypergraph.from_edges([*inst.names, *fresh], edges)
    include = VertexSet.of(h.n, range(base, base + inst.k))
    return ExtensionQuery.build(h, include)
