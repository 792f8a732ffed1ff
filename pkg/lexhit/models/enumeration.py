"""
Enumeration state, instrumentation and reporting models.
"""

import statistics
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import BoundViolationError
from .sets import VertexSet


class SearchNode(BaseModel):
    """A node of the decision tree: decided-in, decided-out and undecided vertices."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    include: VertexSet
    exclude: VertexSet
    remaining: VertexSet
    depth: int = Field(..., ge=0, description="Number of decided vertices")

    @model_validator(mode="after")
    def _partition(self) -> "SearchNode":
        inc, exc, rem = self.include.bits, self.exclude.bits, self.remaining.bits
        if inc & exc or inc & rem or exc & rem:
            raise ValueError("include, exclude and remaining must be disjoint")
        if inc | exc | rem != (1 << self.include.n) - 1:
            raise ValueError("include, exclude and remaining must cover the universe")
        if rem != ((1 << self.include.n) - 1) & ~((1 << self.depth) - 1):
            raise ValueError("remaining must be exactly the undecided suffix of the order")
        return self


class EnumerationStats(BaseModel):
    """Counters maintained while the decision tree is traversed."""

    n: int = Field(0, ge=0, description="Vertex count of the enumerated hypergraph")
    outputs: int = Field(0, ge=0, description="Minimal transversals produced so far")
    nodes_visited: int = Field(0, ge=0, description="Node bodies executed")
    nodes_since_last_output: int = Field(0, ge=0)
    max_nodes_between_outputs: int = Field(
        0, ge=0, description="Largest node count between two consecutive outputs"
    )
    nodes_before_first_output: Optional[int] = Field(None, ge=0)
    oracle_calls: int = Field(0, ge=0)
    tuples_examined: int = Field(0, ge=0, description="Summed over all oracle calls")
    max_include_size_queried: int = Field(0, ge=0, description="Largest |X| passed to the oracle")
    observed_kstar: Optional[int] = Field(None, ge=0, description="Largest output size seen")
    complete: bool = Field(False, description="True once the traversal has finished")
    output_delays: List[float] = Field(
        default_factory=list, description="Seconds before each output since the previous one"
    )

    def node_delay_limit(self) -> int:
        return 2 * self.n - 1

    def record_node(self) -> None:
        self.nodes_visited += 1
        self.nodes_since_last_output += 1

    def record_oracle(self, include_size: int, tuples: int) -> None:
        self.oracle_calls += 1
        self.tuples_examined += tuples
        if include_size > self.max_include_size_queried:
            self.max_include_size_queried = include_size

    def record_output(self, size: int, delay: float) -> None:
        if self.outputs == 0:
            self.nodes_before_first_output = self.nodes_since_last_output
        elif self.nodes_since_last_output > self.max_nodes_between_outputs:
            self.max_nodes_between_outputs = self.nodes_since_last_output
        self.outputs += 1
        self.nodes_since_last_output = 0
        self.output_delays.append(delay)
        if self.observed_kstar is None or size > self.observed_kstar:
            self.observed_kstar = size

    def check_bounds(self) -> None:
        """
        Assert the node-delay and oracle-size bounds against the counters so far.

        Raises:
            BoundViolationError: If any instrumented bound is exceeded
        """
        if self.outputs >= 2 and self.max_nodes_between_outputs > self.node_delay_limit():
            raise BoundViolationError(
                "node-delay", self.max_nodes_between_outputs, self.node_delay_limit()
            )
        if self.nodes_before_first_output is not None:
            if self.nodes_before_first_output > self.n + 1:
                raise BoundViolationError(
                    "nodes-before-first-output", self.nodes_before_first_output, self.n + 1
                )
        if self.complete and self.observed_kstar is not None:
            limit = self.observed_kstar + 1
            if self.max_include_size_queried > limit:
                raise BoundViolationError(
                    "oracle-include-size", self.max_include_size_queried, limit
                )


class RunReport(BaseModel):
    """Summary of one or more enumeration runs, printed by the CLI."""

    n: int
    m: int
    rank: int
    outputs: int = Field(..., description="Outputs produced by the (last) run")
    complete: bool
    n_min: Optional[int] = Field(
        None, description="Number of minimal transversals, complete runs only"
    )
    observed_kstar: Optional[int] = None
    max_node_delay: int = 0
    node_delay_limit: int = 0
    nodes_before_first_output: Optional[int] = None
    oracle_calls: int = 0
    tuples_examined: int = 0
    max_include_size_queried: int = 0
    repeats: int = 1
    delay_min: Optional[float] = Field(None, description="Seconds")
    delay_median: Optional[float] = Field(None, description="Seconds")
    delay_max: Optional[float] = Field(None, description="Seconds")

    @classmethod
    def from_stats(
        cls, n: int, m: int, rank: int, runs: List[EnumerationStats]
    ) -> "RunReport":
        """Aggregate per-run stats; counters come from the last run, delays from all."""
        last = runs[-1]
        delays = [d for run in runs for d in run.output_delays]
        return cls(
            n=n,
            m=m,
            rank=rank,
            outputs=last.outputs,
            complete=last.complete,
            n_min=last.outputs if last.complete else None,
            observed_kstar=last.observed_kstar,
            max_node_delay=max(run.max_nodes_between_outputs for run in runs),
            node_delay_limit=last.node_delay_limit(),
            nodes_before_first_output=last.nodes_before_first_output,
            oracle_calls=last.oracle_calls,
            tuples_examined=last.tuples_examined,
            max_include_size_queried=last.max_include_size_queried,
            repeats=len(runs),
            delay_min=min(delays) if delays else None,
            delay_median=statistics.median(delays) if delays else None,
            delay_max=max(delays) if delays else None,
        )


class VerificationReport(BaseModel):
    """Outcome of checking the enumerator against the brute-force reference."""

    n: int
    m: int
    expected: int = Field(..., description="Minimal transversals found by brute force")
    produced: int = Field(..., description="Minimal transversals produced by the enumerator")
    equal: bool = Field(..., description="Same sets in the same order")
    ordered: bool = Field(..., description="Outputs strictly lex-ascending")
    bounds_ok: bool
    bound_error: Optional[str] = Field(None, description="Message of the first violated bound")
    first_mismatch: Optional[int] = Field(
        None, description="Position of the first differing output, if any"
    )

    @property
    def passed(self) -> bool:
        return self.equal and self.ordered and self.bounds_ok
