"""
Shared fixtures and random-instance generators for the lexhit test suite.
"""

import random
from typing import List, Sequence

import pytest

from lexhit.config import Settings
from lexhit.models.circuits import Antimonotone3NFormula
from lexhit.models.families import MultiColouredInstance, SingleColouredInstance
from lexhit.models.hypergraph import OrderedHypergraph
from lexhit.models.sets import VertexSet
from lexhit.session import HypergraphSession

NAMES = "abcdefghijklmnopqrstuvwxyz"


def make_hypergraph(vertices: str, edges: Sequence[str]) -> OrderedHypergraph:
    """Build a hypergraph from one-letter vertex names, e.g. ``("abc", ["ab", "bc"])``."""
    return OrderedHypergraph.from_named_edges(list(vertices), [list(edge) for edge in edges])


def vs(h: OrderedHypergraph, members: str) -> VertexSet:
    """A vertex set of ``h`` from one-letter names."""
    return h.vertex_set(h.index_of(name) for name in members)


def names_of(h: OrderedHypergraph, sets: Sequence[VertexSet]) -> List[str]:
    return ["".join(s.names(list(h.names))) for s in sets]


def random_hypergraph(rng: random.Random, max_n: int = 12, max_m: int = 15) -> OrderedHypergraph:
    n = rng.randint(0, max_n)
    m = rng.randint(0, max_m)
    edges = []
    for _ in range(m):
        size = rng.randint(0, n) if rng.random() < 0.1 else rng.randint(1, max(1, min(n, 4)))
        edges.append(rng.sample(range(n), min(size, n)))
    return OrderedHypergraph.from_edges(list(NAMES[:n]), edges)


def random_set(rng: random.Random, n: int, density: float = 0.4) -> VertexSet:
    return VertexSet.of(n, (v for v in range(n) if rng.random() < density))


def random_mcif(
    rng: random.Random, max_n: int = 6, max_k: int = 3, max_sets: int = 3
) -> MultiColouredInstance:
    n = rng.randint(0, max_n)
    k = rng.randint(1, max_k)
    colours = tuple(
        tuple(random_set(rng, n) for _ in range(rng.randint(0, max_sets))) for _ in range(k)
    )
    forbidden = tuple(random_set(rng, n, 0.5) for _ in range(rng.randint(0, 4)))
    return MultiColouredInstance(names=tuple(NAMES[:n]), colours=colours, forbidden=forbidden)


def random_if(
    rng: random.Random, max_n: int = 6, max_k: int = 3, max_sets: int = 5
) -> SingleColouredInstance:
    n = rng.randint(0, max_n)
    candidates = tuple(random_set(rng, n) for _ in range(rng.randint(0, max_sets)))
    forbidden = tuple(random_set(rng, n, 0.5) for _ in range(rng.randint(0, 4)))
    return SingleColouredInstance(
        names=tuple(NAMES[:n]),
        candidates=candidates,
        forbidden=forbidden,
        k=rng.randint(1, max_k),
    )


def random_formula(
    rng: random.Random, max_vars: int = 4, max_subformulas: int = 3, max_terms: int = 3
) -> Antimonotone3NFormula:
    count = rng.randint(1, max_vars)
    subformulas = tuple(
        tuple(
            tuple(sorted(rng.sample(range(count), rng.randint(1, count))))
            for _ in range(rng.randint(1, max_terms))
        )
        for _ in range(rng.randint(1, max_subformulas))
    )
    return Antimonotone3NFormula(
        variables=tuple(f"x{i + 1}" for i in range(count)), subformulas=subformulas
    )


@pytest.fixture
def path_hypergraph() -> OrderedHypergraph:
    """h = {{a,b},{b,c}} with order a < b < c."""
    return make_hypergraph("abc", ["ab", "bc"])


@pytest.fixture
def settings() -> Settings:
    return Settings(bruteforce_cap=20, check_bounds=True, log_level="WARNING")


@pytest.fixture
def session(path_hypergraph: OrderedHypergraph, settings: Settings) -> HypergraphSession:
    return HypergraphSession(path_hypergraph, settings=settings)


@pytest.fixture
def write_hypergraph(tmp_path):
    """Write hypergraph text to a temporary file and return its path."""

    def write(text: str, name: str = "h.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep LEXHIT_* variables from the outer shell out of every test."""
    for variable in ("LEXHIT_BRUTEFORCE_CAP", "LEXHIT_CHECK_BOUNDS", "LEXHIT_LOG_LEVEL"):
        monkeypatch.delenv(variable, raising=False)
