"""
Independent Family problem instances.
"""

from enum import Enum
from typing import Annotated, Optional, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator

from .sets import VertexSet


def _element_names(names: Tuple[str, ...]) -> Tuple[str, ...]:
    if len(set(names)) != len(names):
        raise ValueError("universe element names must be distinct")
    for name in names:
        if not name or any(ch.isspace() for ch in name) or "#" in name:
            raise ValueError(f"invalid element name {name!r}")
    return names


ElementNames = Annotated[Tuple[str, ...], AfterValidator(_element_names)]


class MultiColouredInstance(BaseModel):
    """
    Pick one set per colour so that the union covers no forbidden set.

    Example:
        inst = MultiColouredInstance(
            names=("u", "v"),
            colours=((VertexSet.of(2, [0]),), (VertexSet.empty(2),)),
            forbidden=(VertexSet.of(2, [1]),),
        )
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    names: ElementNames = Field(..., description="Universe element labels")
    colours: Tuple[Tuple[VertexSet, ...], ...] = Field(..., description="The lists S_1..S_k")
    forbidden: Tuple[VertexSet, ...] = Field((), description="The forbidden sets T")

    @model_validator(mode="after")
    def _shape(self) -> "MultiColouredInstance":
        if not self.colours:
            raise ValueError("a multicoloured instance needs k >= 1 colours")
        n = len(self.names)
        for s in (*(s for c in self.colours for s in c), *self.forbidden):
            if s.n != n:
                raise ValueError(f"set {s!r} is not over a universe of size {n}")
        return self

    @property
    def k(self) -> int:
        return len(self.colours)

    @property
    def universe_size(self) -> int:
        return len(self.names)

    @classmethod
    def constant(cls, value: bool) -> "MultiColouredInstance":
        """The fixed single-colour instance whose answer is ``value``."""
        empty = VertexSet.empty(0)
        return cls(names=(), colours=((empty,),), forbidden=() if value else (empty,))


class SingleColouredInstance(BaseModel):
    """
    Pick ``k`` sets from one list so that the union covers no forbidden set.

    With ``allow_repetition`` the same list entry may be picked several times;
    otherwise the picks are ``k`` distinct list positions.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    names: ElementNames = Field(..., description="Universe element labels")
    candidates: Tuple[VertexSet, ...] = Field(..., description="The list S")
    forbidden: Tuple[VertexSet, ...] = Field((), description="The forbidden sets T")
    k: int = Field(..., ge=1, description="Number of sets to select")
    allow_repetition: bool = Field(False, description="Whether a list entry may be reused")
    candidate_labels: Optional[Tuple[str, ...]] = Field(
        None, description="Optional display label per candidate, e.g. the formula variable"
    )

    @model_validator(mode="after")
    def _shape(self) -> "SingleColouredInstance":
        n = len(self.names)
        for s in (*self.candidates, *self.forbidden):
            if s.n != n:
                raise ValueError(f"set {s!r} is not over a universe of size {n}")
        if self.candidate_labels is not None and len(self.candidate_labels) != len(
            self.candidates
        ):
            raise ValueError("candidate_labels must have one label per candidate")
        return self

    @property
    def universe_size(self) -> int:
        return len(self.names)


class FamilySolution(BaseModel):
    """Answer of a brute-force Independent Family solver."""

    model_config = ConfigDict(frozen=True)

    value: bool
    selection: Optional[Tuple[int, ...]] = Field(
        None, description="Chosen list position per colour (or per pick) when value is true"
    )
    selections_examined: int = Field(0, ge=0)


class EmitKind(str, Enum):
    """Output forms of the ``reduce`` command."""
    MCIF = "mcif"
    IF = "if"
    CIRCUIT = "circuit"
    FORMULA = "formula"
