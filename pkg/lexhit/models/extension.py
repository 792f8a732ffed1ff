"""
Extension-oracle data models for the lexhit package.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..exceptions import LexHitUsageError
from .hypergraph import OrderedHypergraph
from .sets import VertexSet


class WitnessMode(str, Enum):
    """How candidate witness edges are stored in the per-vertex systems."""
    UNPUNCTURED = "unpunctured"
    PUNCTURED = "punctured"


class ExtensionQuery(BaseModel):
    """Does ``include`` extend to a minimal transversal that avoids ``exclude``?"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    hypergraph: OrderedHypergraph
    include: VertexSet = Field(..., description="The set X that must be contained")
    exclude: VertexSet = Field(..., description="The set Y that must be avoided")

    @model_validator(mode="after")
    def _disjoint_and_aligned(self) -> "ExtensionQuery":
        n = self.hypergraph.n
        if self.include.n != n or self.exclude.n != n:
            raise ValueError("include and exclude must be over the hypergraph's universe")
        if self.include.bits & self.exclude.bits:
            raise ValueError("include and exclude must be disjoint")
        return self

    @classmethod
    def build(
        cls,
        hypergraph: OrderedHypergraph,
        include: VertexSet,
        exclude: Optional[VertexSet] = None,
    ) -> "ExtensionQuery":
        """
        Validate and build a query; ``exclude`` defaults to the empty set.

        Raises:
            LexHitUsageError: If the sets overlap or live in another universe
        """
        if exclude is None:
            exclude = VertexSet.empty(hypergraph.n)
        try:
            return cls(hypergraph=hypergraph, include=include, exclude=exclude)
        except ValidationError as e:
            raise LexHitUsageError(f"Invalid extension query: {e}") from e


class VerdictReason(str, Enum):
    """Which preprocessing rule decided a query without the product search."""
    EMPTY_INCLUDE_HITTING = "empty-include-hitting"
    EMPTY_INCLUDE_NOT_HITTING = "empty-include-not-hitting"
    MISSING_WITNESS = "missing-witness"
    NO_FORBIDDEN = "no-forbidden"


class OracleVerdict(BaseModel):
    """Early answer reached during preprocessing."""

    model_config = ConfigDict(frozen=True)

    value: bool
    reason: VerdictReason
    vertex: Optional[int] = Field(None, description="The include vertex without candidates")


class WitnessSystems(BaseModel):
    """
    Candidate witness edges per include vertex and the forbidden edges.

    ``systems[i]`` belongs to ``include_order[i]``. All sets are over the full universe
    with the excluded vertices already removed.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    include_order: Tuple[int, ...]
    systems: Tuple[Tuple[VertexSet, ...], ...]
    system_origins: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Edge index each candidate was built from"
    )
    forbidden: Tuple[VertexSet, ...]
    forbidden_origins: Tuple[int, ...]
    mode: WitnessMode = WitnessMode.UNPUNCTURED

    def system_sizes(self) -> List[int]:
        return [len(s) for s in self.systems]

    def budget(self) -> int:
        """Total number of hypergraph edges the systems were built from."""
        return sum(self.system_sizes()) + len(self.forbidden)


class OracleStats(BaseModel):
    """Work accounting for one extension query."""

    tuples_examined: int = Field(0, ge=0, description="Cartesian-product tuples tested")
    system_sizes: List[int] = Field(default_factory=list, description="|S_x| per include vertex")
    forbidden_size: int = Field(0, ge=0, description="|T|")
    edge_count: int = Field(0, ge=0, description="m of the queried hypergraph")

    def product_size(self) -> int:
        total = 1
        for size in self.system_sizes:
            total *= size
        return total


class ExtensionResult(BaseModel):
    """Answer of ``extend_decide`` together with its stats."""

    value: bool
    stats: OracleStats
    early: Optional[OracleVerdict] = Field(None, description="Set when preprocessing decided")
