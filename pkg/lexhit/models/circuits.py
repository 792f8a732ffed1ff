"""
Boolean circuit and formula models used by the Independent Family encodings.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GateKind(str, Enum):
    """Gate types; fan-in decides whether an OR/AND gate counts as large."""
    INPUT = "input"
    OR = "or"
    AND = "and"
    NOT = "not"


class Gate(BaseModel):
    """One node of a circuit; ``inputs`` are ids of gates feeding into it."""

    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0)
    kind: GateKind
    inputs: Tuple[int, ...] = ()
    label: Optional[str] = Field(None, description="Set, element or forbidden-set name")


class Weft3Circuit(BaseModel):
    """
    Circuit built from an Independent Family instance.

    Layout: one input per candidate set, an OR gate per universe element, an AND gate
    per forbidden set, one OR over all AND gates, and a NOT on top as the output.
    Gates are stored in topological order and ``gates[i].id == i``.
    """

    model_config = ConfigDict(frozen=True)

    gates: Tuple[Gate, ...]
    input_ids: Tuple[int, ...] = Field(..., description="Input gate per candidate set")
    element_gate_ids: Tuple[int, ...] = Field(..., description="Layer-1 OR gate per element")
    forbidden_gate_ids: Tuple[int, ...] = Field(..., description="Layer-2 AND gate per set")
    top_gate_id: int = Field(..., description="Layer-3 OR gate")
    output_id: int = Field(..., description="The negated output gate")

    @model_validator(mode="after")
    def _topological(self) -> "Weft3Circuit":
        for position, gate in enumerate(self.gates):
            if gate.id != position:
                raise ValueError(f"gate at position {position} has id {gate.id}")
            if any(src >= gate.id for src in gate.inputs):
                raise ValueError(f"gate {gate.id} reads a gate that is not before it")
            if gate.kind == GateKind.INPUT and gate.inputs:
                raise ValueError(f"input gate {gate.id} has inputs")
            if gate.kind == GateKind.NOT and len(gate.inputs) != 1:
                raise ValueError(f"not gate {gate.id} needs exactly one input")
        return self


class Antimonotone3NFormula(BaseModel):
    """
    A conjunction of DNFs over negative literals only.

    ``subformulas[h][i]`` lists the variable indices whose negations form term ``i``
    of subformula ``h``; a term holds iff none of its variables is true.
    """

    model_config = ConfigDict(frozen=True)

    variables: Tuple[str, ...] = Field(..., description="Variable names")
    subformulas: Tuple[Tuple[Tuple[int, ...], ...], ...] = Field(
        ..., description="AND over h, OR over i, AND of negated variables"
    )

    @model_validator(mode="after")
    def _variables_exist(self) -> "Antimonotone3NFormula":
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        count = len(self.variables)
        for h, terms in enumerate(self.subformulas):
            for i, term in enumerate(terms):
                for var in term:
                    if not 0 <= var < count:
                        raise ValueError(f"term ({h},{i}) uses unknown variable {var}")
        return self

    def term_ids(self) -> List[Tuple[int, int]]:
        """All (h, i) pairs in subformula-major order."""
        return [(h, i) for h, terms in enumerate(self.subformulas) for i in range(len(terms))]

    def render(self) -> str:
        """Human-readable form, e.g. ``(~x1 & ~x2 | ~x3) & (~x1)``."""
        parts = []
        for terms in self.subformulas:
            rendered = [
                " & ".join(f"~{self.variables[v]}" for v in term) if term else "true"
                for term in terms
            ]
            parts.append("(" + (" | ".join(rendered) if rendered else "false") + ")")
        return " & ".join(parts) if parts else "true"
