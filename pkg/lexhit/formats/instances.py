"""
Text dumps of Independent Family instances and weft-3 circuits, with parsers.

Instance dump::

    kind: if
    universe: a b c
    k: 2
    repetition: no
    labels: x1 x2          # optional, one per candidate
    candidates:
    set: a b
    set: c
    forbidden:
    set: a c

A multicoloured dump has ``kind: mcif``, no ``k:``/``repetition:`` lines and one
``colour <i>:`` stanza per colour in place of ``candidates:``.

Circuit dump::

    gate 0 input : S1
    gate 3 or 0 1 : a
    output 7

Each gate line gives the id, the kind and the ids of its inputs, optionally followed by
``: label``.
"""

from typing import Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from ..exceptions import LexHitParseError
from ..models.circuits import Gate, GateKind, Weft3Circuit
from ..models.families import MultiColouredInstance, SingleColouredInstance
from ..models.sets import VertexSet
from .hypergraph import significant_lines, split_directive

_YES = {"yes", "true", "1"}
_NO = {"no", "false", "0"}


def _set_line(s: VertexSet, names: Tuple[str, ...]) -> str:
    members = " ".join(s.names(list(names)))
    return f"set: {members}" if members else "set:"


def dump_mcif(inst: MultiColouredInstance) -> str:
    """Render a multicoloured instance."""
    lines = ["kind: mcif", "universe: " + " ".join(inst.names)]
    for i, colour in enumerate(inst.colours, 1):
        lines.append(f"colour {i}:")
        lines.extend(_set_line(s, inst.names) for s in colour)
    lines.append("forbidden:")
    lines.extend(_set_line(t, inst.names) for t in inst.forbidden)
    return "\n".join(line.rstrip() for line in lines) + "\n"


def dump_if(inst: SingleColouredInstance) -> str:
    """Render a single-coloured instance."""
    lines = [
        "kind: if",
        "universe: " + " ".join(inst.names),
        f"k: {inst.k}",
        f"repetition: {'yes' if inst.allow_repetition else 'no'}",
    ]
    if inst.candidate_labels is not None:
        lines.append("labels: " + " ".join(inst.candidate_labels))
    lines.append("candidates:")
    lines.extend(_set_line(s, inst.names) for s in inst.candidates)
    lines.append("forbidden:")
    lines.extend(_set_line(t, inst.names) for t in inst.forbidden)
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_instance(text: str) -> Union[MultiColouredInstance, SingleColouredInstance]:
    """
    Parse the output of :func:`dump_mcif` or :func:`dump_if`.

    Raises:
        LexHitParseError: On malformed lines, unknown elements or an invalid instance
    """
    kind: Optional[str] = None
    names: Optional[List[str]] = None
    index: Dict[str, int] = {}
    k: Optional[int] = None
    repetition = False
    labels: Optional[Tuple[str, ...]] = None
    stanzas: List[Tuple[str, List[VertexSet]]] = []

    for number, line in significant_lines(text):
        key, items = split_directive(line, number)
        if kind is None:
            if key != "kind" or items not in (["mcif"], ["if"]):
                raise LexHitParseError("first line must be 'kind: mcif' or 'kind: if'", number)
            kind = items[0]
        elif key == "universe":
            if names is not None:
                raise LexHitParseError("'universe:' may only appear once", number)
            names = items
            index = {name: i for i, name in enumerate(names)}
        elif key == "k" and kind == "if":
            if len(items) != 1 or not items[0].isdigit():
                raise LexHitParseError(f"invalid k {' '.join(items)!r}", number)
            k = int(items[0])
        elif key == "repetition" and kind == "if":
            word = " ".join(items).lower()
            if word not in _YES | _NO:
                raise LexHitParseError(f"invalid repetition flag {word!r}", number)
            repetition = word in _YES
        elif key == "labels" and kind == "if":
            labels = tuple(items)
        elif key in ("candidates", "forbidden") or (key.startswith("colour") and kind == "mcif"):
            if items:
                raise LexHitParseError(f"'{key}:' takes no values", number)
            stanzas.append((key, []))
        elif key == "set":
            if names is None or not stanzas:
                raise LexHitParseError("'set:' outside a stanza", number)
            try:
                stanzas[-1][1].append(VertexSet.of(len(names), (index[x] for x in items)))
            except KeyError as e:
                raise LexHitParseError(f"unknown element {e.args[0]!r}", number) from None
        else:
            raise LexHitParseError(f"unexpected keyword {key!r}", number)

    if kind is None or names is None:
        raise LexHitParseError("missing 'kind:' or 'universe:' line")
    forbidden = tuple(s for key, sets in stanzas if key == "forbidden" for s in sets)

    try:
        if kind == "mcif":
            colours = tuple(tuple(sets) for key, sets in stanzas if key.startswith("colour"))
            return MultiColouredInstance(names=tuple(names), colours=colours, forbidden=forbidden)
        if k is None:
            raise LexHitParseError("missing 'k:' line")
        candidates = tuple(s for key, sets in stanzas if key == "candidates" for s in sets)
        return SingleColouredInstance(
            names=tuple(names),
            candidates=candidates,
            forbidden=forbidden,
            k=k,
            allow_repetition=repetition,
            candidate_labels=labels,
        )
    except ValidationError as e:
        raise LexHitParseError(f"invalid instance: {e}") from e


def dump_circuit(c: Weft3Circuit) -> str:
    """Render a circuit as one line per gate plus the output line."""
    lines = []
    for gate in c.gates:
        head = " ".join(["gate", str(gate.id), gate.kind.value, *map(str, gate.inputs)])
        lines.append(f"{head} : {gate.label}" if gate.label else head)
    lines.append(f"output {c.output_id}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Weft3Circuit:
    """
    Parse the output of :func:`dump_circuit`.

    The layers are recovered from the shape: the output is a NOT over the top OR gate,
    whose inputs are the forbidden-set AND gates; every other OR gate is an element gate.

    Raises:
        LexHitParseError: On malformed lines or a circuit without that shape
    """
    gates: List[Gate] = []
    output_id: Optional[int] = None

    for number, line in significant_lines(text):
        body, _, label = line.partition(":")
        tokens = body.split()
        if len(tokens) == 2 and tokens[0] == "output" and tokens[1].isdigit():
            output_id = int(tokens[1])
            continue
        if len(tokens) < 3 or tokens[0] != "gate":
            raise LexHitParseError(f"expected 'gate <id> <kind> ...', got {line!r}", number)
        try:
            gates.append(
                Gate(
                    id=int(tokens[1]),
                    kind=GateKind(tokens[2].lower()),
                    inputs=tuple(int(src) for src in tokens[3:]),
                    label=label.strip() or None,
                )
            )
        except ValueError as e:
            raise LexHitParseError(f"invalid gate line: {e}", number) from None

    if output_id is None or not 0 <= output_id < len(gates):
        raise LexHitParseError("missing or dangling 'output' line")
    output = gates[output_id]
    if output.kind != GateKind.NOT:
        raise LexHitParseError(f"output gate {output_id} is not a NOT gate")
    top_id = output.inputs[0] if len(output.inputs) == 1 else -1
    if not 0 <= top_id < len(gates) or gates[top_id].kind != GateKind.OR:
        raise LexHitParseError("the output must negate an OR gate")

    try:
        return Weft3Circuit(
            gates=tuple(gates),
            input_ids=tuple(g.id for g in gates if g.kind == GateKind.INPUT),
            element_gate_ids=tuple(
                g.id for g in gates if g.kind == GateKind.OR and g.id != top_id
            ),
            forbidden_gate_ids=gates[top_id].inputs,
            top_gate_id=top_id,
            output_id=output_id,
        )
    except ValidationError as e:
        raise LexHitParseError(f"invalid circuit: {e}") from e
