"""
Vertex sets over a dense, ordered universe.
"""

from enum import Enum
from typing import Any, Iterable, Iterator, List, Optional

from ..exceptions import LexHitUsageError


class Ordering(str, Enum):
    """Outcome of a lexicographic comparison."""
    SMALLER = "smaller"
    EQUAL = "equal"
    LARGER = "larger"


class VertexSet:
    """
    An immutable subset of the universe ``{0, ..., n-1}`` stored as an integer bitmask.

    Bit ``i`` stands for the vertex of index ``i``; a smaller index means higher
    precedence. Python integers grow as needed, so there is no width limit.
    """

    __slots__ = ("_bits", "_n")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 0:
            raise LexHitUsageError(f"universe size must be non-negative, got {n}")
        if bits < 0 or bits >> n:
            raise LexHitUsageError(
                f"bitmask {bits:#x} has members outside a universe of size {n}",
                {"n": n},
            )
        self._n = n
        self._bits = bits

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        """Build a set from vertex ids; duplicates collapse."""
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise LexHitUsageError(f"vertex {v} outside universe of size {n}", {"n": n})
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def n(self) -> int:
        """Size of the universe this set lives in."""
        return self._n

    @property
    def bits(self) -> int:
        return self._bits

    def _same_universe(self, other: "VertexSet") -> None:
        if self._n != other._n:
            raise LexHitUsageError(
                f"universe mismatch: {self._n} vs {other._n}",
                {"left": self._n, "right": other._n},
            )

    def __contains__(self, v: Any) -> bool:
        return isinstance(v, int) and 0 <= v < self._n and bool(self._bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __bool__(self) -> bool:
        return self._bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self._n, self._bits & other._bits)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self._n, self._bits | other._bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self._n, self._bits & ~other._bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self._n, self._bits ^ other._bits)

    def issubset(self, other: "VertexSet") -> bool:
        self._same_universe(other)
        return self._bits & ~other._bits == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._same_universe(other)
        return self._bits & other._bits == 0

    def add(self, v: int) -> "VertexSet":
        """Return a new set with ``v`` added."""
        return VertexSet.of(self._n, [v]) | self

    def remove(self, v: int) -> "VertexSet":
        """Return a new set without ``v``."""
        return VertexSet(self._n, self._bits & ~(1 << v)) if 0 <= v < self._n else self

    def first(self) -> Optional[int]:
        """Highest-precedence member, or None for the empty set."""
        if not self._bits:
            return None
        return (self._bits & -self._bits).bit_length() - 1

    def complement(self) -> "VertexSet":
        return VertexSet(self._n, ((1 << self._n) - 1) & ~self._bits)

    def sorted(self) -> List[int]:
        """Members in precedence order."""
        return list(self)

    def names(self, labels: List[str]) -> List[str]:
        return [labels[v] for v in self]

    def __repr__(self) -> str:
        return f"VertexSet(n={self._n}, {{{', '.join(map(str, self))}}})"
