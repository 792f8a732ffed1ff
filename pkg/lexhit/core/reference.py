"""
Naive brute-force oracles used as ground truth.

Nothing here imports the other algorithm modules; only the shared data models.
"""

import itertools
import logging
from typing import Dict, List, Tuple, Union

from ..exceptions import BruteForceCapError
from ..models.circuits import Antimonotone3NFormula, GateKind, Weft3Circuit
from ..models.hypergraph import OrderedHypergraph
from ..models.sets import VertexSet

logger = logging.getLogger(__name__)

DEFAULT_CAP = 20


def _guard(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise BruteForceCapError(size, cap, what)


def _precedence_key(n: int, bits: int) -> Tuple[int, ...]:
    # Members sort before non-members at the first differing position.
    return tuple(0 if bits >> v & 1 else 1 for v in range(n))


def bf_all_minimal_transversals(
    h: OrderedHypergraph, cap: int = DEFAULT_CAP
) -> List[VertexSet]:
    """
    Scan all ``2^n`` subsets and keep the hitting sets with no hitting proper subset.

    Raises:
        BruteForceCapError: If ``h`` has more than ``cap`` vertices
    """
    _guard(h.n, cap, "vertices")
    n = h.n
    edges = [edge.bits for edge in h.edges]
    hitting = {bits for bits in range(1 << n) if all(bits & e for e in edges)}
    # Hitting sets are closed upwards, so checking one-smaller subsets is enough.
    minimal = [
        bits
        for bits in hitting
        if not any(bits & ~(1 << v) in hitting for v in range(n) if bits >> v & 1)
    ]
    minimal.sort(key=lambda bits: _precedence_key(n, bits))
    logger.debug("brute force found %d minimal transversals over %d vertices", len(minimal), n)
    return [VertexSet(n, bits) for bits in minimal]


def bf_extension(
    h: OrderedHypergraph, x: VertexSet, y: VertexSet, cap: int = DEFAULT_CAP
) -> bool:
    """True iff some minimal transversal contains ``x`` and avoids ``y``."""
    return any(
        x.bits & ~s.bits == 0 and not s.bits & y.bits
        for s in bf_all_minimal_transversals(h, cap)
    )


def _eval_formula(f: Antimonotone3NFormula, true_vars: Tuple[int, ...]) -> bool:
    for terms in f.subformulas:
        satisfied = False
        for term in terms:
            if not any(var in true_vars for var in term):
                satisfied = True
        if not satisfied:
            return False
    return True


def _eval_circuit(c: Weft3Circuit, true_inputs: Tuple[int, ...]) -> bool:
    memo: Dict[int, bool] = {}

    def value(gate_id: int) -> bool:
        if gate_id not in memo:
            gate = c.gates[gate_id]
            if gate.kind == GateKind.INPUT:
                memo[gate_id] = gate_id in true_inputs
            elif gate.kind == GateKind.OR:
                memo[gate_id] = any(value(src) for src in gate.inputs)
            elif gate.kind == GateKind.AND:
                memo[gate_id] = all(value(src) for src in gate.inputs)
            else:
                memo[gate_id] = not value(gate.inputs[0])
        return memo[gate_id]

    return value(c.output_id)


def bf_weight_k_sat(
    target: Union[Weft3Circuit, Antimonotone3NFormula], k: int, cap: int = DEFAULT_CAP
) -> bool:
    """
    Try every assignment with exactly ``k`` true inputs (or variables).

    Raises:
        BruteForceCapError: If there are more than ``cap`` inputs or variables
    """
    if isinstance(target, Weft3Circuit):
        _guard(len(target.input_ids), cap, "inputs")
        return any(
            _eval_circuit(target, chosen)
            for chosen in itertools.combinations(target.input_ids, k)
        )
    _guard(len(target.variables), cap, "variables")
    return any(
        _eval_formula(target, chosen)
        for chosen in itertools.combinations(range(len(target.variables)), k)
    )
