"""Tests for the lexhit command line."""

import json
import time

import pytest
from click.testing import CliRunner

from lexhit import __version__
from lexhit.cli import main

PATH_TEXT = "vertices: a b c\nedge: a b\nedge: b c\n"
UNHITTABLE_TEXT = "vertices: a\nedge:\nedge: a\n"


@pytest.fixture
def runner():
    """Click test runner with stdout and stderr kept apart."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # Newer click always captures stderr separately.
        return CliRunner()


@pytest.fixture
def path_file(write_hypergraph):
    return write_hypergraph(PATH_TEXT)


@pytest.fixture
def unhittable_file(write_hypergraph):
    return write_hypergraph(UNHITTABLE_TEXT, "unhittable.txt")


class TestMain:
    def test_help_lists_exit_codes(self, runner):
        result = runner.invoke(main, ["--help"])

        assert result.exit_code == 0
        assert "Exit codes" in result.stdout
        commands = ["enumerate", "lexmin", "lexmax", "count", "extend", "reduce", "verify", "bench"]
        for command in commands:
            assert command in result.stdout

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])

        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_bad_environment(self, runner, path_file):
        result = runner.invoke(main, ["count", path_file], env={"LEXHIT_CHECK_BOUNDS": "maybe"})

        assert result.exit_code == 2
        assert "LEXHIT_CHECK_BOUNDS" in result.stderr


class TestEnumerateCommand:
    def test_lines(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file])

        assert result.exit_code == 0
        assert result.stdout == "a c\nb\n"

    def test_limit(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file, "--limit", "1"])

        assert result.exit_code == 0
        assert result.stdout == "a c\n"

    def test_limit_zero(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file, "--limit", "0"])

        assert result.exit_code == 0
        assert result.stdout == ""
        assert result.stderr == ""

    def test_negative_limit_is_a_usage_error(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file, "--limit", "-1"])

        assert result.exit_code == 2

    def test_json(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file, "--json"])
        records = [json.loads(line) for line in result.stdout.splitlines()]

        assert result.exit_code == 0
        assert records == [
            {"index": 0, "vertices": ["a", "c"]},
            {"index": 1, "vertices": ["b"]},
        ]

    def test_stats(self, runner, path_file):
        result = runner.invoke(main, ["enumerate", path_file, "--stats"])
        report = json.loads(result.stderr)

        assert result.exit_code == 0
        assert report["n_min"] == 2
        assert report["max_node_delay"] <= 5

    def test_no_transversal(self, runner, unhittable_file):
        result = runner.invoke(main, ["enumerate", unhittable_file])

        assert result.exit_code == 0
        assert result.stdout == ""
        assert "no transversal exists" in result.stderr

    def test_empty_universe_prints_empty_line(self, runner, write_hypergraph):
        result = runner.invoke(main, ["enumerate", write_hypergraph("vertices:\n")])

        assert result.exit_code == 0
        assert result.stdout == "\n"

    def test_empty_universe_with_empty_edge(self, runner, write_hypergraph):
        result = runner.invoke(main, ["enumerate", write_hypergraph("vertices:\nedge:\n")])

        assert result.exit_code == 0
        assert result.stdout == ""
        assert "no transversal exists" in result.stderr

    def test_minimize_edges(self, runner, write_hypergraph):
        path = write_hypergraph("vertices: a b\nedge: a\nedge: a b\n")
        result = runner.invoke(main, ["enumerate", path, "--minimize-edges"])

        assert result.stdout == "a\n"

    def test_parse_error(self, runner, write_hypergraph):
        result = runner.invoke(main, ["enumerate", write_hypergraph("vertices: a\nedge: z\n")])

        assert result.exit_code == 2
        assert "error: line 2: unknown vertex 'z'" in result.stderr

    def test_invalid_utf8_is_a_parse_error(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"vertices: a \xff")
        result = runner.invoke(main, ["enumerate", str(path)])

        assert result.exit_code == 2
        assert "error: line 1: invalid UTF-8" in result.stderr

    @pytest.mark.slow
    def test_limit_one_streams_from_a_huge_family(self, runner, write_hypergraph):
        # 14 disjoint pairs: 2^14 minimal transversals over 28 vertices.
        names = [f"v{i}" for i in range(28)]
        lines = ["vertices: " + " ".join(names)]
        lines += [f"edge: v{2 * i} v{2 * i + 1}" for i in range(14)]
        path = write_hypergraph("\n".join(lines) + "\n", "pairs.txt")

        started = time.perf_counter()
        result = runner.invoke(main, ["enumerate", path, "--limit", "1"])
        elapsed = time.perf_counter() - started

        assert result.exit_code == 0
        assert result.stdout == " ".join(names[0::2]) + "\n"
        assert elapsed < 1.0

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(main, ["enumerate", str(tmp_path / "absent.txt")])

        assert result.exit_code == 2
        assert "File not found" in result.stderr


class TestExtremesAndCount:
    def test_lexmin(self, runner, path_file):
        result = runner.invoke(main, ["lexmin", path_file])

        assert result.exit_code == 0
        assert result.stdout == "a c\n"

    def test_lexmax(self, runner, path_file):
        result = runner.invoke(main, ["lexmax", path_file])

        assert result.exit_code == 0
        assert result.stdout == "b\n"

    @pytest.mark.parametrize("command", ["lexmin", "lexmax"])
    def test_no_transversal(self, runner, unhittable_file, command):
        result = runner.invoke(main, [command, unhittable_file])

        assert result.exit_code == 1
        assert "no transversal exists" in result.stderr

    def test_count(self, runner, path_file, unhittable_file):
        assert runner.invoke(main, ["count", path_file]).stdout == "2\n"
        assert runner.invoke(main, ["count", unhittable_file]).stdout == "0\n"


class TestExtendCommand:
    def test_true(self, runner, path_file):
        result = runner.invoke(main, ["extend", path_file, "--include", "a"])

        assert result.exit_code == 0
        assert result.stdout == "true\n"

    def test_false(self, runner, path_file):
        result = runner.invoke(main, ["extend", path_file, "--include", "a", "--exclude", "c"])

        assert result.exit_code == 1
        assert result.stdout == "false\n"

    def test_stats(self, runner, path_file):
        result = runner.invoke(main, ["extend", path_file, "--include", "a,b", "--stats"])
        stats = json.loads(result.stderr)

        assert result.exit_code == 1
        assert stats["early"]["reason"] == "missing-witness"

    def test_overlap(self, runner, path_file):
        result = runner.invoke(main, ["extend", path_file, "--include", "a", "--exclude", "a"])

        assert result.exit_code == 2
        assert "disjoint" in result.stderr

    def test_unknown_name(self, runner, path_file):
        result = runner.invoke(main, ["extend", path_file, "--include", "z"])

        assert result.exit_code == 2
        assert result.stderr.startswith("error: ")


class TestReduceCommand:
    def test_true_sentinel(self, runner, path_file):
        result = runner.invoke(main, ["reduce", path_file])

        assert result.exit_code == 0
        assert result.stdout == "kind: mcif\nuniverse:\ncolour 1:\nset:\nforbidden:\n"

    def test_mcif(self, runner, path_file):
        result = runner.invoke(main, ["reduce", path_file, "--include", "a"])

        assert result.stdout == (
            "kind: mcif\nuniverse: a b c\ncolour 1:\nset: a b\nforbidden:\nset: b c\n"
        )

    def test_punctured(self, runner, path_file):
        result = runner.invoke(main, ["reduce", path_file, "--include", "a", "--punctured"])

        assert "colour 1:\nset: b\n" in result.stdout

    def test_if(self, runner, path_file):
        result = runner.invoke(main, ["reduce", path_file, "--include", "a", "--emit", "if"])

        assert result.exit_code == 0
        assert result.stdout.startswith("kind: if\nuniverse: a b c x[1,1]\nk: 1\n")

    def test_circuit_and_formula(self, runner, path_file):
        circuit = runner.invoke(main, ["reduce", path_file, "--include", "a", "--emit", "circuit"])
        formula = runner.invoke(main, ["reduce", path_file, "--include", "a", "--emit", "formula"])

        assert circuit.exit_code == formula.exit_code == 0
        assert circuit.stdout.splitlines()[-1].startswith("output ")
        assert formula.stdout.startswith("(")

    def test_unknown_emit(self, runner, path_file):
        result = runner.invoke(main, ["reduce", path_file, "--emit", "cnf"])

        assert result.exit_code == 2


class TestVerifyCommand:
    def test_pass(self, runner, path_file):
        result = runner.invoke(main, ["verify", path_file])

        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "equal: yes",
            "ordered: yes",
            "bounds: ok",
            "transversals: 2 (expected 2)",
            "PASS",
        ]

    def test_empty_universe_with_empty_edge(self, runner, write_hypergraph):
        result = runner.invoke(main, ["verify", write_hypergraph("vertices:\nedge:\n")])

        assert result.exit_code == 0
        assert "transversals: 0 (expected 0)" in result.stdout
        assert result.stdout.endswith("PASS\n")

    def test_empty_hypergraph(self, runner, write_hypergraph):
        result = runner.invoke(main, ["verify", write_hypergraph("vertices: a b\n")])

        assert result.exit_code == 0
        assert "transversals: 1 (expected 1)" in result.stdout

    def test_cap(self, runner, path_file):
        result = runner.invoke(main, ["verify", path_file, "--max-n", "2"])

        assert result.exit_code == 2
        assert "Brute force refused" in result.stderr

    def test_cap_from_environment(self, runner, path_file):
        result = runner.invoke(main, ["verify", path_file], env={"LEXHIT_BRUTEFORCE_CAP": "1"})

        assert result.exit_code == 2


class TestBenchCommand:
    def test_report(self, runner, path_file):
        result = runner.invoke(main, ["bench", path_file, "--repeat", "3"])
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["repeats"] == 3
        assert report["n"] == 3
        assert report["max_node_delay"] <= 2 * report["n"] - 1
        assert report["nodes_before_first_output"] <= report["n"] + 1

    def test_repeat_must_be_positive(self, runner, path_file):
        result = runner.invoke(main, ["bench", path_file, "--repeat", "0"])

        assert result.exit_code == 2


class TestDeterminism:
    """Two runs over the same input print the same bytes."""

    CORPUS = "vertices: a b c d e\nedge: a b c\nedge: c d\nedge: d e\nedge: a e\n"

    @pytest.mark.parametrize(
        "args",
        [
            ["enumerate"],
            ["enumerate", "--json"],
            ["count"],
            ["lexmin"],
            ["lexmax"],
            ["reduce", "--include", "b,d"],
            ["reduce", "--include", "b,d", "--emit", "if"],
            ["reduce", "--include", "b,d", "--emit", "circuit"],
            ["reduce", "--include", "b,d", "--emit", "formula"],
        ],
    )
    def test_repeated_runs_match(self, runner, write_hypergraph, args):
        path = write_hypergraph(self.CORPUS)
        first = runner.invoke(main, [args[0], path, *args[1:]])
        second = runner.invoke(main, [args[0], path, *args[1:]])

        assert first.exit_code == second.exit_code == 0
        assert first.stdout_bytes == second.stdout_bytes

    def test_bench_matches_apart_from_timings(self, runner, write_hypergraph):
        path = write_hypergraph(self.CORPUS)
        timings = {"delay_min", "delay_median", "delay_max"}
        reports = []
        for _ in range(2):
            result = runner.invoke(main, ["bench", path, "--repeat", "2"])
            assert result.exit_code == 0
            report = json.loads(result.stdout)
            reports.append({key: value for key, value in report.items() if key not in timings})

        assert reports[0] == reports[1]
