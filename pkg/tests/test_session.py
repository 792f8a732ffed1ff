"""Tests for HypergraphSession and its sub-clients."""

import pytest

from conftest import make_hypergraph, names_of, vs
from lexhit import HypergraphSession, Settings
from lexhit.core import enumeration
from lexhit.core.extension import decide_masks
from lexhit.core.reference import bf_weight_k_sat
from lexhit.exceptions import BoundViolationError, BruteForceCapError, LexHitUsageError
from lexhit.models.circuits import Antimonotone3NFormula, Weft3Circuit
from lexhit.models.enumeration import RunReport
from lexhit.models.extension import WitnessSystems
from lexhit.models.families import EmitKind, MultiColouredInstance, SingleColouredInstance
from lexhit.models.sets import VertexSet


class TestSession:
    def test_overrides_win_over_settings(self, path_hypergraph, settings):
        session = HypergraphSession(path_hypergraph, settings, check_bounds=False)

        assert session.settings.check_bounds is False
        assert session.settings.bruteforce_cap == 20

    def test_environment_is_the_default_base(self, path_hypergraph, monkeypatch):
        monkeypatch.setenv("LEXHIT_BRUTEFORCE_CAP", "7")

        assert HypergraphSession(path_hypergraph).settings.bruteforce_cap == 7
        assert HypergraphSession(path_hypergraph, bruteforce_cap=3).settings.bruteforce_cap == 3

    def test_from_text(self):
        session = HypergraphSession.from_text("vertices: a b\nedge: a\n")

        assert session.hypergraph.m == 1

    def test_from_file_minimize(self, write_hypergraph):
        path = write_hypergraph("vertices: a b\nedge: a\nedge: a b\n")

        assert HypergraphSession.from_file(path).hypergraph.m == 2
        assert HypergraphSession.from_file(path, minimize_edges=True).hypergraph.m == 1

    def test_context_manager(self, path_hypergraph):
        with HypergraphSession(path_hypergraph) as session:
            assert session.hypergraph is path_hypergraph

    def test_vertex_set_coercion(self, session, path_hypergraph):
        h = path_hypergraph

        assert session.vertex_set(None) == VertexSet.empty(3)
        assert session.vertex_set("a,c") == vs(h, "ac")
        assert session.vertex_set("a c") == vs(h, "ac")
        assert session.vertex_set(["b"]) == vs(h, "b")
        assert session.vertex_set(vs(h, "bc")) == vs(h, "bc")

    def test_vertex_set_rejects_bad_input(self, session):
        with pytest.raises(LexHitUsageError):
            session.vertex_set("z")
        with pytest.raises(LexHitUsageError):
            session.vertex_set(VertexSet.empty(5))

    def test_names(self, session, path_hypergraph):
        assert session.names(vs(path_hypergraph, "ca")) == ["a", "c"]


class TestEnumerationAPI:
    def test_stream(self, session, path_hypergraph):
        assert names_of(path_hypergraph, list(session.enumeration.stream())) == ["ac", "b"]
        assert names_of(path_hypergraph, list(session.enumeration.stream(limit=1))) == ["ac"]
        assert list(session.enumeration.stream(limit=0)) == []

    def test_negative_limit(self, session):
        with pytest.raises(LexHitUsageError, match="non-negative"):
            session.enumeration.stream(limit=-1)

    def test_extremes_and_count(self, session, path_hypergraph):
        assert session.enumeration.lex_smallest() == vs(path_hypergraph, "ac")
        assert session.enumeration.lex_largest() == vs(path_hypergraph, "b")
        assert session.enumeration.count() == 2
        assert len(session.enumeration.all()) == 2

    def test_under_order(self, session, path_hypergraph):
        outputs = list(session.enumeration.under_order(["b", "a", "c"]))

        assert names_of(path_hypergraph, outputs) == ["b", "ac"]

    def test_under_order_needs_every_vertex(self, session):
        with pytest.raises(LexHitUsageError):
            session.enumeration.under_order(["a"])

    def test_transversal_hypergraph(self, session):
        assert session.enumeration.transversal_hypergraph().m == 2
        assert session.enumeration.transversal_rank() == 2

    def test_bench(self, session):
        report = session.enumeration.bench(repeat=2)

        assert isinstance(report, RunReport)
        assert report.repeats == 2
        assert report.n_min == 2
        assert report.rank == 2
        assert report.max_node_delay <= report.node_delay_limit == 5
        assert report.nodes_before_first_output <= 4

    def test_bench_needs_a_run(self, session):
        with pytest.raises(LexHitUsageError):
            session.enumeration.bench(repeat=0)


class TestExtensionAPI:
    def test_decide(self, session):
        assert session.extension.decide("a").value is True
        assert session.extension.decide("a", "c").value is False
        assert session.extension.decide(["a", "b"]).value is False

    def test_overlap(self, session):
        with pytest.raises(LexHitUsageError, match="disjoint"):
            session.extension.decide("a", "a")

    def test_witness_systems(self, session):
        ws = session.extension.witness_systems("a")

        assert isinstance(ws, WitnessSystems)
        assert ws.include_order == (0,)

    def test_lex_smallest_contains(self, session):
        assert session.extension.lex_smallest_contains("b") is True
        assert session.extension.lex_smallest_contains("a,b") is False


class TestReductionsAPI:
    def test_chain_types(self, session):
        assert isinstance(session.reductions.to_mcif("a"), MultiColouredInstance)
        assert isinstance(session.reductions.to_if("a"), SingleColouredInstance)
        assert isinstance(session.reductions.to_circuit("a"), Weft3Circuit)
        assert isinstance(session.reductions.to_formula("a"), Antimonotone3NFormula)

    @pytest.mark.parametrize(
        "include, exclude", [("a", ""), ("a", "c"), ("b", ""), ("a,b", ""), ("c", "b")]
    )
    def test_formula_agrees_with_decide(self, session, include, exclude):
        k = session.reductions.to_if(include, exclude).k
        formula = session.reductions.to_formula(include, exclude)

        assert bf_weight_k_sat(formula, k) == session.extension.decide(include, exclude).value

    def test_emit_sentinel(self, session):
        text = session.reductions.emit(EmitKind.MCIF, "")

        assert text == "kind: mcif\nuniverse:\ncolour 1:\nset:\nforbidden:\n"

    def test_emit_formula_and_circuit(self, session):
        assert session.reductions.emit("formula", "a").endswith(")\n")
        assert "output " in session.reductions.emit(EmitKind.CIRCUIT, "a", punctured=True)


class TestReferenceAPI:
    def test_all_minimal_transversals(self, session, path_hypergraph):
        assert names_of(path_hypergraph, session.reference.all_minimal_transversals()) == [
            "ac",
            "b",
        ]

    def test_cap_from_settings(self, path_hypergraph, settings):
        session = HypergraphSession(path_hypergraph, settings, bruteforce_cap=2)

        with pytest.raises(BruteForceCapError):
            session.reference.verify()

    def test_extension(self, session):
        assert session.reference.extension("a") is True
        assert session.reference.extension("a", "c") is False

    def test_verify_passes(self, session):
        report = session.reference.verify()

        assert report.passed
        assert report.expected == report.produced == 2
        assert report.first_mismatch is None

    def test_verify_detects_mismatch(self, session, path_hypergraph):
        report = session.reference.verify(expected=[vs(path_hypergraph, "b")])

        assert not report.passed
        assert not report.equal
        assert report.ordered
        assert report.first_mismatch == 0

    def test_verify_detects_missing_tail(self, session, path_hypergraph):
        expected = [vs(path_hypergraph, "ac"), vs(path_hypergraph, "b"), vs(path_hypergraph, "c")]
        report = session.reference.verify(expected=expected)

        assert report.first_mismatch == 2
        assert report.expected == 3

    def test_verify_empty_universe(self):
        session = HypergraphSession(make_hypergraph("", []), Settings())

        assert session.reference.verify().passed

    def test_verify_empty_universe_with_empty_edge(self):
        session = HypergraphSession(make_hypergraph("", [""]), Settings())
        report = session.reference.verify()

        assert report.passed
        assert report.expected == report.produced == 0

    def test_verify_arms_oracle_budgets(self, session, monkeypatch):
        seen = []

        def recording(masks, n, x, y, check_budgets=False):
            seen.append(check_budgets)
            return decide_masks(masks, n, x, y, check_budgets)

        monkeypatch.setattr(enumeration, "decide_masks", recording)

        assert session.reference.verify().passed
        assert seen and all(seen)

    def test_verify_reports_budget_violation(self, session, monkeypatch):
        def over_budget(masks, n, x, y, check_budgets=False):
            if check_budgets and x:
                raise BoundViolationError("tuple-budget", 5, 4)
            return decide_masks(masks, n, x, y, check_budgets)

        monkeypatch.setattr(enumeration, "decide_masks", over_budget)
        report = session.reference.verify()

        assert not report.passed
        assert not report.bounds_ok
        assert "tuple-budget" in report.bound_error
        assert report.produced == 0
        assert report.first_mismatch == 0
