"""Tests for the text formats."""

import pytest

from conftest import names_of
from lexhit.core.circuits import evaluate_circuit, if_to_circuit
from lexhit.core.extension import reduce_to_mcif
from lexhit.core.families import mcif_to_if, solve_if_bruteforce, solve_mcif_bruteforce
from lexhit.exceptions import LexHitParseError, LexHitUsageError
from lexhit.formats import (
    dump_circuit,
    dump_hypergraph,
    dump_if,
    dump_mcif,
    load_hypergraph,
    parse_circuit,
    parse_hypergraph,
    parse_instance,
)
from lexhit.models.extension import ExtensionQuery
from lexhit.models.families import MultiColouredInstance, SingleColouredInstance
from lexhit.models.sets import VertexSet

PATH_TEXT = """\
# the path a-b-c
vertices: a b c
edge: a b
edge: b c   # second edge
"""


class TestParseHypergraph:
    def test_path(self):
        h = parse_hypergraph(PATH_TEXT)

        assert h.names == ("a", "b", "c")
        assert names_of(h, list(h.edges)) == ["ab", "bc"]

    def test_empty_edge(self):
        h = parse_hypergraph("vertices: a\nedge:\n")

        assert h.edges == (VertexSet.empty(1),)

    def test_keywords_are_case_insensitive(self):
        h = parse_hypergraph("Vertices: a b\nEDGE: b\n")

        assert names_of(h, list(h.edges)) == ["b"]

    def test_no_vertices(self):
        h = parse_hypergraph("vertices:\n")

        assert h.n == 0
        assert h.m == 0

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("edge: a\n", 1, "first line"),
            ("vertices: a a\n", 1, "duplicate vertex"),
            ("vertices: a\nedge: z\n", 2, "unknown vertex 'z'"),
            ("vertices: a\n\n# note\nvertices: b\n", 4, "only appear once"),
            ("vertices: a\nhyperedge: a\n", 2, "unknown keyword"),
            ("vertices: a\nedge a\n", 2, "expected"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(LexHitParseError) as exc_info:
            parse_hypergraph(text)

        assert exc_info.value.line == line
        assert exc_info.value.details == {"line": line}
        assert str(exc_info.value).startswith(f"line {line}: ")
        assert fragment in str(exc_info.value)

    def test_missing_header(self):
        with pytest.raises(LexHitParseError, match="missing 'vertices:'"):
            parse_hypergraph("# nothing here\n")

    def test_dump_round_trip(self):
        h = parse_hypergraph("vertices: a b c\nedge: b a\nedge:\n")
        text = dump_hypergraph(h)

        assert text == "vertices: a b c\nedge: a b\nedge:\n"
        assert parse_hypergraph(text) == h


class TestLoadHypergraph:
    def test_load(self, write_hypergraph):
        h = load_hypergraph(write_hypergraph(PATH_TEXT))

        assert h.m == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(LexHitUsageError, match="File not found"):
            load_hypergraph(tmp_path / "absent.txt")

    def test_directory(self, tmp_path):
        with pytest.raises(LexHitUsageError, match="not a file"):
            load_hypergraph(tmp_path)

    def test_invalid_utf8_reports_the_line(self, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes(b"vertices: a b\nedge: a \xff\n")

        with pytest.raises(LexHitParseError, match="line 2: invalid UTF-8") as info:
            load_hypergraph(path)
        assert info.value.line == 2


class TestInstances:
    def test_mcif_dump(self, path_hypergraph):
        h = path_hypergraph
        inst = reduce_to_mcif(ExtensionQuery.build(h, h.vertex_set([0])))

        text = dump_mcif(inst)

        assert text.startswith("kind: mcif\nuniverse: a b c\ncolour 1:\n")
        assert "forbidden:\nset: b c\n" in text

    def test_mcif_reparse_keeps_answer(self):
        u, v = VertexSet.of(2, [0]), VertexSet.of(2, [1])
        inst = MultiColouredInstance(
            names=("u", "v"), colours=((u, v), (VertexSet.empty(2),)), forbidden=(u,)
        )
        back = parse_instance(dump_mcif(inst))

        assert back == inst
        assert solve_mcif_bruteforce(back).value == solve_mcif_bruteforce(inst).value

    def test_if_reparse_keeps_answer(self):
        u, v = VertexSet.of(2, [0]), VertexSet.of(2, [1])
        inst = mcif_to_if(
            MultiColouredInstance(names=("u", "v"), colours=((u,), (v,)), forbidden=(u | v,))
        )
        text = dump_if(inst)
        back = parse_instance(text)

        assert "repetition: no" in text
        assert isinstance(back, SingleColouredInstance)
        assert back == inst
        assert solve_if_bruteforce(back).value == solve_if_bruteforce(inst).value

    def test_labels_survive(self):
        inst = SingleColouredInstance(
            names=("t1.1",),
            candidates=(VertexSet.of(1, [0]), VertexSet.empty(1)),
            forbidden=(VertexSet.of(1, [0]),),
            k=1,
            candidate_labels=("x1", "x2"),
        )

        assert parse_instance(dump_if(inst)).candidate_labels == ("x1", "x2")

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("universe: a\n", "first line"),
            ("kind: if\nuniverse: a\nk: two\n", "invalid k"),
            ("kind: if\nuniverse: a\nk: 1\nrepetition: maybe\n", "repetition"),
            ("kind: if\nuniverse: a\nset: a\n", "outside a stanza"),
            ("kind: if\nuniverse: a\nk: 1\ncandidates:\nset: z\n", "unknown element"),
            ("kind: if\nuniverse: a\ncandidates:\n", "missing 'k:'"),
            ("kind: mcif\nuniverse: a\nforbidden:\n", "invalid instance"),
            ("kind: mcif\n", "missing"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(LexHitParseError, match=fragment):
            parse_instance(text)


class TestCircuits:
    @pytest.fixture
    def circuit(self):
        inst = SingleColouredInstance(
            names=("u", "v"),
            candidates=(VertexSet.of(2, [0]), VertexSet.of(2, [0, 1])),
            forbidden=(VertexSet.of(2, [0, 1]),),
            k=1,
        )
        return if_to_circuit(inst)

    def test_dump(self, circuit):
        lines = dump_circuit(circuit).splitlines()

        assert lines[0] == "gate 0 input : S1"
        assert lines[2] == "gate 2 or 0 1 : u"
        assert lines[-1] == "output 6"

    def test_reparse(self, circuit):
        back = parse_circuit(dump_circuit(circuit))

        assert back == circuit
        for inputs in ([], [0], [1], [0, 1]):
            assert evaluate_circuit(back, inputs) == evaluate_circuit(circuit, inputs)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("gate 0 input\n", "output"),
            ("gate 0 input\noutput 0\n", "not a NOT"),
            ("gate 0 input\ngate 1 not 0\noutput 1\n", "negate an OR"),
            ("gate 0 xor\noutput 0\n", "invalid gate"),
            ("wire 0 1\n", "expected"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(LexHitParseError, match=fragment):
            parse_circuit(text)
