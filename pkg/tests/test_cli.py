"""
Tests for the command-line interface.
"""

import io
import json
import math
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from probcheck import __version__
from probcheck.cli import CORPUS_TEXT, CommandOptions, RunReport, cmd_check, load_expected, main, render_text
from probcheck.cli.report import EstimateRecord, EventRecord, VerdictRecord
from probcheck.core.exceptions import ProbCheckError, UnknownEventError
from probcheck.exact.models import ExactMethod, ExactResult
from probcheck.logging_config import configure_logging
from probcheck.parsers.parser import load_problem


SCHEMA_PATH = Path(__file__).parent.parent / "docs" / "report-schema.json"
FAST = ["--trials", "20000"]


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv: str) -> tuple[int, RunReport]:
    code, out, _ = run_cli(capsys, *argv, "--format", "json")
    return code, RunReport.model_validate_json(out)


class TestEval:
    """Tests for the eval command."""

    def test_text_report(self, capsys, corpus_file):
        """Test the exact values of the corpus events."""
        code, out, err = run_cli(capsys, "eval", corpus_file)
        assert code == 0
        assert err == ""
        assert out.startswith(f"# probcheck {__version__} eval {corpus_file}\n")
        assert "p1: person[0] != person[1]\n" in out
        assert "  exact: 11/12 = 0.91(6) (132 of 144 outcomes; compositional 11/12)" in out
        assert "  exact: 143/144 = 0.9930(5) (143 of 144 outcomes; compositional 143/144)" in out
        assert "  exact: 121/144 = 0.8402(7) (121 of 144 outcomes; compositional 121/144)" in out

    def test_json_report(self, capsys, corpus_file):
        """Test that the JSON report carries both exact methods and no sampling block."""
        code, report = run_json(capsys, "eval", corpus_file)
        assert code == 0
        assert report.command == "eval"
        assert report.sampling is None
        assert [(e.name, e.exact, e.compositional) for e in report.events] == [
            ("p1", "11/12", "11/12"),
            ("p2", "143/144", "143/144"),
            ("p3", "121/144", "121/144"),
        ]
        assert report.events[1].expression == "not (person[0] == 5 and person[1] == 5)"

    def test_certain_event(self, capsys, problem_file):
        """Test that the certain event has probability 1/1."""
        path = problem_file("space person[2] uniform(12)\nevent t: true\n")
        code, report = run_json(capsys, "eval", path)
        assert code == 0
        assert report.events[0].exact == "1/1"
        assert report.events[0].exact_decimal == "1"

    def test_stdin(self, capsys, monkeypatch):
        """Test reading the problem from standard input."""
        monkeypatch.setattr("sys.stdin", io.StringIO(CORPUS_TEXT))
        code, report = run_json(capsys, "eval", "-")
        assert code == 0
        assert report.source == "<stdin>"

    def test_space_too_large(self, capsys, problem_file):
        """Test exit code 2 when enumeration would exceed the cap."""
        path = problem_file("space person[8] uniform(12)\nevent all_may: person[0] == may\n")
        code, out, err = run_cli(capsys, "eval", path)
        assert code == 2
        assert out == ""
        assert "enumeration cap" in err

    def test_max_enumeration_option(self, capsys, corpus_file):
        """Test that a lower cap applies to the corpus."""
        code, _, _ = run_cli(capsys, "eval", corpus_file, "--max-enumeration", "100")
        assert code == 2

    def test_method_mismatch(self, capsys, corpus_file, monkeypatch):
        """Test exit code 3 when the exact methods disagree."""

        def wrong(space, expr, config=None):
            return ExactResult(probability=Fraction(1, 2), method=ExactMethod.COMPOSITIONAL, space_size=144)

        monkeypatch.setattr("probcheck.cli.commands.prob_compositional", wrong)
        code, _, err = run_cli(capsys, "eval", corpus_file)
        assert code == 3
        assert "Internal mismatch for 'p1'" in err


class TestSimulate:
    """Tests for the simulate command."""

    def test_records_sampling(self, capsys, corpus_file):
        """Test that the seed, trials and batch size are reported."""
        code, report = run_json(capsys, "simulate", corpus_file, *FAST, "--seed", "42")
        assert code == 0
        assert report.sampling is not None
        assert (report.sampling.seed, report.sampling.trials) == (42, 20000)
        for event in report.events:
            assert event.estimate is not None
            assert event.estimate.trials == 20000
            assert event.exact is None

    def test_same_seed_same_output(self, capsys, corpus_file):
        """Test that a fixed seed gives byte-identical reports."""
        _, first, _ = run_cli(capsys, "simulate", corpus_file, *FAST, "--seed", "7")
        _, again, _ = run_cli(capsys, "simulate", corpus_file, *FAST, "--seed", "7", "--workers", "3")
        assert first == again

    def test_random_seed_recorded(self, capsys, corpus_file):
        """Test that --seed random draws a seed and reports it."""
        code, report = run_json(capsys, "simulate", corpus_file, *FAST, "--seed", "random")
        assert code == 0
        assert report.sampling is not None
        assert 0 <= report.sampling.seed < 1 << 64

    def test_text_estimate_format(self, capsys, corpus_file):
        """Test the value ± stderr form."""
        _, out, _ = run_cli(capsys, "simulate", corpus_file, *FAST)
        assert "(seed 0, trials 20000)" in out
        assert out.count("  estimate: ") == 3
        assert " ± " in out

    @pytest.mark.parametrize(
        "argv",
        [["--trials", "0"], ["--z", "0"], ["--workers", "0"], ["--seed", "-1"], ["--batch-size", "0"]],
    )
    def test_invalid_option_values(self, capsys, corpus_file, argv):
        """Test that out-of-range options exit 1."""
        code, out, err = run_cli(capsys, "simulate", corpus_file, *argv)
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_verbose_logs_to_stderr(self, capsys, corpus_file):
        """Test that logging never reaches the report."""
        code, out, err = run_cli(capsys, "simulate", corpus_file, *FAST, "-v", "--format", "json")
        assert code == 0
        RunReport.model_validate_json(out)
        assert "Sampling 20000 outcomes" in err
        configure_logging(verbose=False)


class TestCheck:
    """Tests for the check command."""

    def test_corpus_passes(self, capsys, corpus_file):
        """Test that every corpus event passes at the default threshold."""
        code, out, _ = run_cli(capsys, "check", corpus_file, "--trials", "200000")
        assert code == 0
        assert out.count(" PASS") == 3
        assert out.endswith("all checks passed\n")

    def test_planted_error_fails(self, capsys, corpus_file, problem_file):
        """Test that claiming 11/12 for p2 exits 4 and still prints the report."""
        expected = problem_file('{"p2": "11/12"}', "expected.json")
        code, out, err = run_cli(capsys, "check", corpus_file, "--trials", "10000", "--expected", expected)
        assert code == 4
        assert "failed: p2" in out
        assert "against 11/12" in out
        assert "error: Consistency check failed for: p2" in err

    def test_infinite_z_serialized(self, capsys, problem_file):
        """Test that a zero-spread failure writes z as the string Infinity."""
        path = problem_file("space coin[1] uniform(2)\nevent t: true\n")
        expected = problem_file('{"t": "1/2"}', "expected.json")
        code, out, _ = run_cli(capsys, "check", path, "--trials", "100", "--expected", expected, "--format", "json")
        assert code == 4
        verdict = json.loads(out)["events"][0]["verdict"]
        assert verdict["z_score"] == "Infinity"
        assert verdict["passed"] is False

    def test_certain_event_passes(self, capsys, problem_file):
        """Test that the certain event passes with z = 0 for any config."""
        path = problem_file("space person[2] uniform(12)\nevent t: true\n")
        code, report = run_json(capsys, "check", path, "--trials", "1", "--z", "0.5")
        assert code == 0
        assert report.events[0].verdict is not None
        assert report.events[0].verdict.z_score == 0.0

    def test_expected_unknown_event(self, capsys, corpus_file, problem_file):
        """Test that expected values must name declared events."""
        expected = problem_file('{"p9": "1/2"}', "expected.json")
        code, _, err = run_cli(capsys, "check", corpus_file, "--expected", expected)
        assert code == 1
        assert "Unknown event 'p9'" in err

    @pytest.mark.parametrize("content", ["[1, 2]", '{"p1": "half"}', "{not json"])
    def test_expected_malformed(self, capsys, corpus_file, problem_file, content):
        """Test that malformed expected files exit 1."""
        expected = problem_file(content, "expected.json")
        code, _, _ = run_cli(capsys, "check", corpus_file, "--expected", expected)
        assert code == 1

    def test_cmd_check_directly(self, corpus_problem):
        """Test the library-level command."""
        report = cmd_check(corpus_problem, CommandOptions(trials=10_000))
        assert report.failed_events() == []
        with pytest.raises(UnknownEventError):
            cmd_check(corpus_problem, CommandOptions(trials=10), {"nope": Fraction(1, 2)})


class TestLoadExpected:
    """Tests for load_expected."""

    def test_fractions_and_integers(self, problem_file):
        """Test that values may be fraction strings or integers."""
        path = problem_file('{"a": "2/4", "b": 1, "c": "0"}', "expected.json")
        assert load_expected(path) == {"a": Fraction(1, 2), "b": Fraction(1), "c": Fraction(0)}

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file raises ProbCheckError."""
        with pytest.raises(ProbCheckError, match="Cannot read expected values"):
            load_expected(tmp_path / "missing.json")


class TestAnalyze:
    """Tests for the analyze command."""

    def test_whole_problem(self, capsys, corpus_file):
        """Test sites for every event and readings for every fork."""
        code, report = run_json(capsys, "analyze", corpus_file)
        assert code == 0
        sites = {event.name: event.sites for event in report.events}
        assert sites["p1"] == []
        assert sites["p3"] == []
        assert [site.location for site in sites["p2"]] == [[]]
        assert [reading.name for reading in report.analysis] == ["p1prime", "same_month"]
        assert not report.analysis[0].equivalent
        assert report.analysis[1].equivalent

    def test_atoms(self, capsys, corpus_file):
        """Test comparing readings of an atom list."""
        code, out, _ = run_cli(capsys, "analyze", corpus_file, "--atoms", "person[0]==may, person[1]==may")
        assert code == 0
        assert "143/144 = 0.9930(5)" in out
        assert "121/144 = 0.8402(7)" in out
        assert "divergence: 11/72 = 0.152(7)" in out

    def test_event_selector(self, capsys, corpus_file):
        """Test reporting one event's sites."""
        code, out, _ = run_cli(capsys, "analyze", corpus_file, "--event", "p2")
        assert code == 0
        assert "ambiguity site at root: not (person[0] == 5 and person[1] == 5)" in out

    def test_event_without_sites(self, capsys, corpus_file):
        """Test that the 'neither' event has no ambiguity sites."""
        code, out, _ = run_cli(capsys, "analyze", corpus_file, "--event", "p3")
        assert code == 0
        assert "  no ambiguity sites" in out

    def test_single_atom_collapses(self, capsys, corpus_file):
        """Test that a single condition gives the same value under both readings."""
        code, report = run_json(capsys, "analyze", corpus_file, "--atoms", "person[0]==person[1]")
        assert code == 0
        (reading,) = report.analysis
        assert reading.p_loose == reading.p_strict == "11/12"
        assert reading.divergence == "0/1"
        assert reading.equivalent

    def test_fork_selector(self, capsys, corpus_file):
        """Test comparing the readings of a declared fork."""
        code, report = run_json(capsys, "analyze", corpus_file, "--fork", "same_month")
        assert code == 0
        assert report.events == []
        assert report.analysis[0].p_loose == report.analysis[0].p_strict == "11/12"

    @pytest.mark.parametrize("argv", [["--event", "p9"], ["--fork", "p1"], ["--atoms", "person[0] = may"]])
    def test_bad_selectors(self, capsys, corpus_file, argv):
        """Test that unknown names and unparsable atoms exit 1."""
        code, out, _ = run_cli(capsys, "analyze", corpus_file, *argv)
        assert code == 1
        assert out == ""

    def test_selectors_exclusive(self, capsys, corpus_file):
        """Test that only one selector may be given."""
        code, _, _ = run_cli(capsys, "analyze", corpus_file, "--event", "p1", "--fork", "p1prime")
        assert code == 1


class TestCorpus:
    """Tests for the corpus command."""

    def test_prints_corpus_and_passes(self, capsys):
        """Test that the corpus text leads the report and every check passes."""
        code, out, _ = run_cli(capsys, "corpus", "--trials", "100000")
        assert code == 0
        assert out.startswith(CORPUS_TEXT.splitlines()[0])
        assert "event p2: not (person[0] == may and person[1] == may)" in out
        assert "fork p1prime:" in out
        assert out.endswith("all checks passed\n")

    def test_json_corpus_reparses(self, capsys, corpus_problem):
        """Test that the embedded problem text parses to the corpus."""
        code, report = run_json(capsys, "corpus", "--trials", "10000")
        assert code == 0
        assert report.command == "corpus"
        assert report.problem_text is not None
        assert load_problem(report.problem_text, "<corpus>").same_content(corpus_problem)
        assert all(event.verdict is not None and event.sites is not None for event in report.events)
        assert len(report.analysis) == 2


class TestErrors:
    """Tests for error reporting and exit codes."""

    def test_parse_error_located(self, capsys, problem_file):
        """Test that parse errors name the file, line and column."""
        path = problem_file("space person[2] uniform(12)\nevent p1 person[0] == may\n")
        code, out, err = run_cli(capsys, "eval", path)
        assert code == 1
        assert out == ""
        assert err.startswith(f"error: {path}:2:")
        assert f"  {path}:2:" in err

    def test_missing_file(self, capsys, tmp_path):
        """Test that an unreadable problem file exits 1."""
        code, _, err = run_cli(capsys, "eval", str(tmp_path / "missing.prob"))
        assert code == 1
        assert "Cannot read" in err

    def test_deep_nesting_is_a_diagnostic(self, capsys, problem_file):
        """Test that a deeply nested event exits 1 with a located error instead of a traceback."""
        path = problem_file("space x[1] uniform(2)\nevent e: " + "(" * 400 + "x[0] == 1" + ")" * 400 + "\n")
        code, out, err = run_cli(capsys, "eval", path)
        assert code == 1
        assert out == ""
        assert err.startswith(f"error: {path}:2:")
        assert "nested too deeply" in err

    @pytest.mark.parametrize("argv", [[], ["frobnicate"], ["eval"], ["simulate", "x", "--seed", "abc"]])
    def test_usage_errors(self, capsys, argv):
        """Test that usage errors exit 1, not argparse's 2."""
        code, _, _ = run_cli(capsys, *argv)
        assert code == 1

    def test_version(self, capsys):
        """Test that --version exits 0."""
        code, out, _ = run_cli(capsys, "--version")
        assert code == 0
        assert __version__ in out


class TestReportSchema:
    """Tests for the published report schema."""

    @pytest.fixture
    def schema(self) -> dict:
        """The JSON Schema from docs/."""
        return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))

    @pytest.mark.parametrize(
        "argv",
        [
            ["eval"],
            ["simulate", *FAST],
            ["check", *FAST],
            ["analyze"],
            ["analyze", "--atoms", "person[0]==may, person[1]==may"],
        ],
    )
    def test_reports_validate(self, capsys, corpus_file, schema, argv):
        """Test that every command's JSON report validates against the schema."""
        code, out, _ = run_cli(capsys, argv[0], corpus_file, *argv[1:], "--format", "json")
        assert code == 0
        jsonschema.validate(instance=json.loads(out), schema=schema)

    def test_corpus_report_validates(self, capsys, schema):
        """Test the corpus report, which embeds the problem text."""
        code, out, _ = run_cli(capsys, "corpus", *FAST, "--format", "json")
        assert code == 0
        jsonschema.validate(instance=json.loads(out), schema=schema)

    def test_infinite_z_validates(self, capsys, problem_file, schema):
        """Test that a failed zero-spread check still matches the schema."""
        path = problem_file("space coin[1] uniform(2)\nevent t: true\n")
        expected = problem_file('{"t": "1/2"}', "expected.json")
        code, out, _ = run_cli(capsys, "check", path, "--trials", "100", "--expected", expected, "--format", "json")
        assert code == 4
        jsonschema.validate(instance=json.loads(out), schema=schema)

    def test_schema_rejects_null_z(self, schema):
        """Test that the schema tells a lost infinity apart from a number."""
        document = json.loads(self._infinite_report().to_json())
        document["events"][0]["verdict"]["z_score"] = None
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(instance=document, schema=schema)

    def test_infinite_z_round_trips(self):
        """Test that the model writes and reads back an infinite z-score."""
        report = self._infinite_report()
        assert json.loads(report.to_json())["events"][0]["verdict"]["z_score"] == "Infinity"
        again = RunReport.model_validate_json(report.to_json())
        assert again.events[0].verdict is not None
        assert math.isinf(again.events[0].verdict.z_score)

    def test_top_level_keys(self, capsys, corpus_file, schema):
        """Test that a report has exactly the documented keys."""
        _, out, _ = run_cli(capsys, "check", corpus_file, *FAST, "--format", "json")
        document = json.loads(out)
        assert set(document) == set(schema["properties"])
        assert set(schema["required"]) <= set(document)

    def test_event_keys(self, capsys, corpus_file, schema):
        """Test that event records have exactly the documented keys."""
        _, out, _ = run_cli(capsys, "corpus", *FAST, "--format", "json")
        for event in json.loads(out)["events"]:
            assert set(event) == set(schema["$defs"]["EventRecord"]["properties"])

    def test_render_text_without_checks(self):
        """Test that reports without verdicts have no summary line."""
        report = RunReport(version=__version__, command="eval", source="x")
        assert render_text(report) == f"# probcheck {__version__} eval x\n"

    @staticmethod
    def _infinite_report() -> RunReport:
        verdict = VerdictRecord(p_exact="1/2", z_score=math.inf, threshold=5.0, passed=False)
        estimate = EstimateRecord(hits=100, trials=100, p_hat=1.0, std_err=0.0)
        event = EventRecord(name="t", expression="true", estimate=estimate, verdict=verdict)
        return RunReport(version=__version__, command="check", source="x", events=[event])
