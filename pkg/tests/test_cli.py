"""CLI surface: argument handling, report schema, formats, exit codes."""

import json

import pytest

from hexforms import cli

REPORT_KEYS = ["command", "params", "result", "witnesses", "verified_to"]


def run_cli(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr().out
    return status, out


def run_json(capsys, *argv):
    status, out = run_cli(capsys, *argv)
    return status, json.loads(out)


class TestReports:
    def test_count_zero(self, capsys):
        status, report = run_json(capsys, "count", "--form", "1,1,1", "--n", "0")
        assert status == 0
        assert report["result"] == 1
        assert list(report) == REPORT_KEYS

    def test_hex(self, capsys):
        status, report = run_json(capsys, "hex", "--n", "2")
        assert status == 0
        assert report["result"] == 0

    def test_series(self, capsys):
        status, report = run_json(capsys, "series", "--which", "phi", "--order", "4")
        assert status == 0
        assert report["result"] == [1, 2, 0, 0, 2]

    def test_exclusion(self, capsys):
        status, report = run_json(capsys, "exclusion", "--lemma", "P21", "--n", "10")
        assert status == 0
        assert report["result"] is True

    def test_escalator_failure_witness(self, capsys):
        status, report = run_json(capsys, "escalator", "--form", "1,1,3")
        assert status == 0
        assert report["result"] == {"passed": False, "failed_at": 6}
        assert report["witnesses"] == [6]

    def test_universal_gap(self, capsys):
        status, report = run_json(
            capsys, "universal", "--form", "1,7,1", "--bound", "2000")
        assert status == 0
        assert report["result"]["first_gap"] == 6
        assert report["result"]["theorem_violation"] is False

    def test_ternary_gap(self, capsys):
        status, report = run_json(capsys, "ternary-gap", "--a", "1", "--c", "2")
        assert status == 0
        assert report["result"] == {"first_gap": 5, "verdict": "gap-found"}

    def test_verify_lemma_clean(self, capsys):
        status, report = run_json(
            capsys, "verify-lemma", "--lemma", "L113", "--bound", "500")
        assert status == 0
        assert report["result"]["verified"] is True
        assert report["verified_to"] == 500
        assert report["witnesses"] == []

    def test_identities_base(self, capsys):
        status, report = run_json(
            capsys, "identities", "--case", "base", "--order", "600")
        assert status == 0
        assert report["result"]["verified"] is True

    def test_identities_case(self, capsys):
        status, report = run_json(
            capsys, "identities", "--case", "C1b", "--order", "300")
        assert status == 0
        assert report["result"]["routes_agree"] is True


class TestClassify:
    ARGS = ("classify", "--amax", "2", "--bmax", "10", "--cmax", "6",
            "--bound", "2000")

    def test_json_lists_22_triples(self, capsys):
        status, report = run_json(capsys, *self.ARGS)
        assert status == 0
        assert report["result"]["count"] == 22
        assert report["result"]["universal_triples"][0] == [1, 1, 1]
        assert report["result"]["theorem_violations"] == []
        assert all({"triple", "first_gap"} == set(w) for w in report["witnesses"])

    def test_output_round_trips_and_is_deterministic(self, capsys):
        _, first = run_cli(capsys, *self.ARGS)
        _, second = run_cli(capsys, *self.ARGS)
        assert first == second
        parsed = json.loads(first)
        assert json.dumps(parsed, indent=2) + "\n" == first

    def test_csv(self, capsys):
        status, out = run_cli(capsys, *self.ARGS, "--format", "csv")
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "a,b,c"
        assert len(lines) == 23
        assert lines[1] == "1,1,1"

    def test_small_box_needs_flag(self, capsys):
        status = cli.main(["classify", "--amax", "1", "--bmax", "1",
                           "--cmax", "1", "--bound", "50"])
        err = capsys.readouterr().err
        assert status == 2
        assert "box" in err

    def test_small_box_with_flag(self, capsys):
        status, report = run_json(
            capsys, "classify", "--amax", "1", "--bmax", "1", "--cmax", "1",
            "--bound", "50", "--allow-small-box")
        assert status == 0
        assert report["result"]["universal_triples"] == [[1, 1, 1]]


class TestUsageErrors:
    def test_malformed_form(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--form", "1,2", "--n", "3"])
        assert exc.value.code == 2

    def test_unnormalized_form(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--form", "2,1,1", "--n", "3"])
        assert exc.value.code == 2

    def test_unknown_lemma(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["exclusion", "--lemma", "L999", "--n", "3"])
        assert exc.value.code == 2

    def test_unknown_case(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["identities", "--case", "C2"])
        assert exc.value.code == 2

    def test_csv_only_for_classify(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["hex", "--n", "3", "--format", "csv"])
        assert exc.value.code == 2

    def test_negative_n(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["hex", "--n", "-1"])
        assert exc.value.code == 2


class TestTableFormat:
    def test_table_render(self, capsys):
        status, out = run_cli(capsys, "escalator", "--form", "1,1,3",
                              "--format", "table")
        assert status == 0
        assert "command: escalator" in out
        assert "passed: False" in out


def test_run_alias(capsys):
    assert cli.run(["hex", "--n", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["result"] == 6
