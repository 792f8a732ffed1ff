"""
Hypergraph-related data models for the lexhit package.
"""

from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from ..exceptions import LexHitUsageError
from .sets import VertexSet


class OrderedHypergraph(BaseModel):
    """
    A vertex universe with a fixed precedence order plus a set of edges.

    The precedence order is the order of ``names``: the vertex with id 0 comes first.
    Edges are deduplicated on construction, keeping the first occurrence; superset
    edges, the empty edge and isolated vertices are all kept.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    names: Tuple[str, ...] = Field(
        ..., description="Display label per vertex, in precedence order"
    )
    edges: Tuple[VertexSet, ...] = Field((), description="Distinct edges in input order")

    @field_validator("names")
    @classmethod
    def _valid_names(cls, names: Tuple[str, ...]) -> Tuple[str, ...]:
        seen = set()
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "#" in name:
                raise ValueError(f"invalid vertex name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate vertex name {name!r}")
            seen.add(name)
        return names

    @field_validator("edges")
    @classmethod
    def _dedup_edges(cls, edges: Tuple[VertexSet, ...]) -> Tuple[VertexSet, ...]:
        return tuple(dict.fromkeys(edges))

    @model_validator(mode="after")
    def _edges_in_universe(self) -> "OrderedHypergraph":
        n = len(self.names)
        for edge in self.edges:
            if edge.n != n:
                raise ValueError(f"edge {edge!r} is not over a universe of size {n}")
        return self

    @classmethod
    def from_edges(
        cls, names: Sequence[str], edges: Iterable[Iterable[int]]
    ) -> "OrderedHypergraph":
        """
        Build a hypergraph from vertex labels and edges given as vertex ids.

        Raises:
            LexHitUsageError: If a name is invalid or an edge leaves the universe
        """
        n = len(names)
        try:
            return cls(names=tuple(names), edges=tuple(VertexSet.of(n, e) for e in edges))
        except ValidationError as e:
            raise LexHitUsageError(f"Invalid hypergraph: {e}") from e

    @classmethod
    def from_named_edges(
        cls, names: Sequence[str], edges: Iterable[Iterable[str]]
    ) -> "OrderedHypergraph":
        """Like :meth:`from_edges`, with edges given by vertex name."""
        index = {name: i for i, name in enumerate(names)}
        try:
            id_edges = [[index[name] for name in edge] for edge in edges]
        except KeyError as e:
            raise LexHitUsageError(f"Unknown vertex name {e.args[0]!r}") from e
        return cls.from_edges(names, id_edges)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> List[int]:
        return [edge.bits for edge in self.edges]

    def universe(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise LexHitUsageError(f"Unknown vertex name {name!r}", {"name": name}) from None

    def minimize(self) -> "OrderedHypergraph":
        """Drop every edge that is a proper superset of another edge."""
        masks = self.edge_masks()
        kept = [
            edge
            for edge, e in zip(self.edges, masks)
            if not any(f != e and f & ~e == 0 for f in masks)
        ]
        return OrderedHypergraph(names=self.names, edges=tuple(kept))


class TransversalRecord(BaseModel):
    """A minimal transversal together with one witness edge per member."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    set: VertexSet = Field(..., description="The minimal transversal")
    witnesses: Dict[int, int] = Field(
        ..., description="Member vertex id -> index of an edge meeting the set in exactly it"
    )


class FailureReason(str, Enum):
    """Why a vertex set is not a minimal transversal."""
    NOT_HITTING = "not-hitting"
    EXPENDABLE = "expendable"


class MinimalityFailure(BaseModel):
    """Structured reason returned by ``check_minimal`` on failure."""

    model_config = ConfigDict(frozen=True)

    reason: FailureReason = Field(..., description="Kind of violation")
    edge: Optional[int] = Field(None, description="Index of an edge the set misses")
    vertex: Optional[int] = Field(None, description="A member without a witness edge")


class RestrictedHypergraph(BaseModel):
    """A hypergraph with some vertices removed, plus the map back to the original ids."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    hypergraph: OrderedHypergraph
    original_ids: Tuple[int, ...] = Field(
        ..., description="original_ids[new_id] is the vertex id in the unrestricted hypergraph"
    )
    original_n: int = Field(..., ge=0, description="Universe size before restriction")

    def lift(self, vs: VertexSet) -> VertexSet:
        """Map a set over the restricted universe back to the original universe."""
        return VertexSet.of(self.original_n, (self.original_ids[v] for v in vs))
