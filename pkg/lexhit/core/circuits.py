"""
Weft-3 circuits and antimonotone 3-normalised formulas for Independent Family.
"""

import logging
from typing import Dict, Iterable, List, Optional, Set

from ..exceptions import BoundViolationError, LexHitUsageError
from ..models.circuits import Antimonotone3NFormula, Gate, GateKind, Weft3Circuit
from ..models.families import SingleColouredInstance

logger = logging.getLogger(__name__)


def if_to_circuit(inst: SingleColouredInstance) -> Weft3Circuit:
    """
    Build the circuit that is true exactly on selections covering no forbidden set.

    Inputs come first (one per candidate, in list order), then one OR gate per universe
    element, one AND gate per forbidden set, the top OR gate and the NOT output.
    """
    gates: List[Gate] = []

    def add(kind: GateKind, inputs: Iterable[int], label: Optional[str] = None) -> int:
        gate_id = len(gates)
        gates.append(Gate(id=gate_id, kind=kind, inputs=tuple(inputs), label=label))
        return gate_id

    labels = inst.candidate_labels or tuple(f"S{j + 1}" for j in range(len(inst.candidates)))
    input_ids = [add(GateKind.INPUT, (), label) for label in labels]
    element_ids = [
        add(
            GateKind.OR,
            (input_ids[j] for j, s in enumerate(inst.candidates) if u in s),
            inst.names[u],
        )
        for u in range(inst.universe_size)
    ]
    forbidden_ids = [
        add(GateKind.AND, (element_ids[u] for u in t), f"T{index + 1}")
        for index, t in enumerate(inst.forbidden)
    ]
    top_id = add(GateKind.OR, forbidden_ids, "any-covered")
    output_id = add(GateKind.NOT, (top_id,), "output")

    circuit = Weft3Circuit(
        gates=tuple(gates),
        input_ids=tuple(input_ids),
        element_gate_ids=tuple(element_ids),
        forbidden_gate_ids=tuple(forbidden_ids),
        top_gate_id=top_id,
        output_id=output_id,
    )
    logger.debug("built circuit with %d gates", len(gates))
    return circuit


def evaluate_circuit(c: Weft3Circuit, inputs: Iterable[int]) -> bool:
    """
    Evaluate the circuit with the given input gates set to true.

    Raises:
        LexHitUsageError: If an id does not name an input gate
    """
    on = set(inputs)
    unknown = on - set(c.input_ids)
    if unknown:
        raise LexHitUsageError(f"not input gates: {sorted(unknown)}", {"ids": sorted(unknown)})
    values: List[bool] = []
    for gate in c.gates:
        if gate.kind == GateKind.INPUT:
            values.append(gate.id in on)
        elif gate.kind == GateKind.OR:
            values.append(any(values[src] for src in gate.inputs))
        elif gate.kind == GateKind.AND:
            values.append(all(values[src] for src in gate.inputs))
        else:
            values.append(not values[gate.inputs[0]])
    return values[c.output_id]


def _is_large(gate: Gate) -> bool:
    return gate.kind in (GateKind.OR, GateKind.AND) and len(gate.inputs) > 2


def weft(c: Weft3Circuit) -> int:
    """Largest number of large (fan-in > 2) gates on any input-to-output path."""
    best: Dict[int, int] = {}
    for gate in c.gates:
        if gate.kind == GateKind.INPUT:
            best[gate.id] = 0
            continue
        reached = [best[src] for src in gate.inputs if src in best]
        if reached:
            best[gate.id] = max(reached) + (1 if _is_large(gate) else 0)
    return best.get(c.output_id, 0)


def layer_counts(c: Weft3Circuit) -> Set[int]:
    """Numbers of unbounded-fan-in layer gates seen along the input-to-output paths."""
    layered = {*c.element_gate_ids, *c.forbidden_gate_ids, c.top_gate_id}
    counts: Dict[int, Set[int]] = {}
    for gate in c.gates:
        if gate.kind == GateKind.INPUT:
            counts[gate.id] = {0}
            continue
        step = 1 if gate.id in layered else 0
        seen = {count + step for src in gate.inputs for count in counts.get(src, set())}
        if seen:
            counts[gate.id] = seen
    return counts.get(c.output_id, set())


def check_weft3(c: Weft3Circuit) -> None:
    """
    Assert that every input-to-output path crosses each of the three layers once and
    that the weft by fan-in is at most 3.

    Raises:
        BoundViolationError: If the structure is violated
    """
    counts = layer_counts(c)
    if counts - {3}:
        raise BoundViolationError("layers-per-path", max(counts - {3}), 3)
    actual = weft(c)
    if actual > 3:
        raise BoundViolationError("weft", actual, 3)


def eval_wa3ns(f: Antimonotone3NFormula, assignment: Iterable[int]) -> bool:
    """
    Evaluate the formula with the given variable indices set to true.

    A term holds iff none of its variables is true; a subformula holds iff one of its
    terms does; the formula holds iff every subformula does.
    """
    true_vars = set(assignment)
    return all(
        any(true_vars.isdisjoint(term) for term in terms) for terms in f.subformulas
    )


def circuit_to_formula(c: Weft3Circuit) -> Antimonotone3NFormula:
    """
    Push the output negation down to the inputs.

    The circuit is NOT(OR over forbidden of AND over elements of OR over inputs), which
    equals AND over forbidden of OR over elements of AND over negated inputs.
    """
    position = {gate_id: index for index, gate_id in enumerate(c.input_ids)}
    variables = tuple(
        c.gates[gate_id].label or f"S{index + 1}" for index, gate_id in enumerate(c.input_ids)
    )
    if len(set(variables)) != len(variables):
        variables = tuple(f"S{index + 1}" for index in range(len(c.input_ids)))
    subformulas = tuple(
        tuple(
            tuple(position[src] for src in c.gates[element].inputs)
            for element in c.gates[forbidden].inputs
        )
        for forbidden in c.forbidden_gate_ids
    )
    return Antimonotone3NFormula(variables=variables, subformulas=subformulas)
