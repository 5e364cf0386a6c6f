import json

import pytest

from .helpers import cli_runner
from .. import __version__
from ..cli import main
from ..cli import checks
from ..cli.checks import PUBLISHED_SEQUENCES
from ..config import RunConfig
from ..exceptions import DomainError


def _run(runner, args, stdin=None):
    result = runner.invoke(main, args, input=stdin)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestCommands:
    @pytest.mark.timeout(60)
    def test_verlinde(self, cli_runner):
        assert _run(cli_runner, ["verlinde", "--g", "3", "--p", "7"]) == {"N": 98}
        assert _run(cli_runner, ["verlinde", "--g", "2", "--p", "5", "--no-brute-force"]) == {"N": 5}

    @pytest.mark.timeout(30)
    def test_theta(self, cli_runner):
        assert _run(cli_runner, ["theta", "--p", "9"]) == {"theta": 3}

    @pytest.mark.timeout(30)
    def test_recurrence(self, cli_runner):
        data = _run(cli_runner, ["recurrence", "--p", "5", "--zeta", "1", "--mod", "5"])
        assert data == {"period": 24, "zeros_mod_24": [4, 10, 16, 22]}
        data = _run(cli_runner, ["recurrence", "--p", "7", "--zeta", "3"])
        assert data["terms"] == PUBLISHED_SEQUENCES[(7, 3)]

    @pytest.mark.timeout(30)
    def test_recurrence_from_stdin(self, cli_runner):
        spec = json.dumps({"char_poly": [1, -5, 5], "initial": [2, 5]})
        data = _run(cli_runner, ["recurrence", "--g-max", "4"], stdin=spec)
        assert data == {"terms": [2, 5, 15, 50]}

    @pytest.mark.timeout(30)
    def test_large_terms_are_strings(self, cli_runner):
        data = _run(cli_runner, ["recurrence", "--p", "9", "--zeta", "5", "--g-max", "20"])
        assert isinstance(data["terms"][-1], str)
        assert int(data["terms"][10]) == PUBLISHED_SEQUENCES[(9, 5)][10]

    @pytest.mark.timeout(60)
    def test_signature(self, cli_runner):
        data = _run(cli_runner, ["signature", "--g", "2", "--p", "5", "--zeta", "1", "--central"])
        assert (data["N"], data["sigma"], data["h_plus"]) == (5, 3, 4)
        assert data["central"]["nonvanishing"] is True
        data = _run(cli_runner, ["signature", "--g", "3", "--p", "7"])
        assert data["sigma"] == data["N"] == 98

    @pytest.mark.timeout(30)
    def test_dgw_phase(self, cli_runner):
        document = {"matrix": [[-1, 0], [0, -1]], "form": {"m": 1, "n": 1}}
        data = _run(cli_runner, ["dgw-phase"], stdin=json.dumps(document))
        assert data["phase"] == pytest.approx(0.5)
        assert "lift" not in data

    @pytest.mark.timeout(30)
    def test_dgw_phase_with_path(self, cli_runner):
        document = {
            "matrix": [[-1, 0], [0, -1]],
            "form": {"m": 1, "n": 1},
            "path": {"generators": [[[[0, 3.141592653589793], 0], [0, [0, -3.141592653589793]]]], "steps": 32},
        }
        data = _run(cli_runner, ["dgw-phase"], stdin=json.dumps(document))
        assert data["lift"] == pytest.approx(0.5, abs=1e-9)

    @pytest.mark.timeout(60)
    def test_commutators(self, cli_runner):
        c, s = 1.3374349463048447, 0.8881059821807432
        document = {"matrix": [[c, s], [s, c]], "form": {"m": 1, "n": 1}}
        data = _run(cli_runner, ["commutators"], stdin=json.dumps(document))
        assert data["count"] == len(data["pairs"])
        assert data["report"]["residual"] < 1e-8

    @pytest.mark.timeout(30)
    def test_burau(self, cli_runner):
        data = _run(cli_runner, ["burau", "--k", "4", "--order", "2", "--letters", "1,2,1"])
        assert data["singular"] is True
        assert data["definite"] is None
        assert data["inertia"] == [1, 1, 1]
        assert data["unitarizable"] == "non-unitarizable"
        assert data["pure"] is False
        assert data["invariance_residual"] < 1e-10
        assert data["matrix"]["dim"] == 3

    @pytest.mark.timeout(30)
    def test_count_roots(self, cli_runner):
        data = _run(cli_runner, ["count-roots", "--g", "4", "--p", "31"])
        assert (data["count"], data["true_count"], data["bound"]) == (9, 8, 6)
        assert data["window_bound"] == "117/16"
        assert data["p_threshold"] == "104/5"


class TestGroupOptions:
    @pytest.mark.timeout(30)
    def test_version(self, cli_runner):
        result = cli_runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    @pytest.mark.timeout(30)
    def test_table_format(self, cli_runner):
        result = cli_runner.invoke(main, ["--format", "table", "theta", "--p", "9"])
        assert result.exit_code == 0
        assert result.output.split() == ["theta", "3"]

    @pytest.mark.timeout(30)
    def test_output_and_input_files(self, cli_runner, tmp_path):
        source = tmp_path / "spec.json"
        source.write_text(json.dumps({"char_poly": [1, -3, 3], "initial": [2, 3]}))
        target = tmp_path / "out.json"
        args = ["--input", str(source), "--output", str(target), "recurrence", "--g-max", "5"]
        result = cli_runner.invoke(main, args)
        assert result.exit_code == 0
        assert result.output == ""
        assert json.loads(target.read_text()) == {"terms": [2, 3, 3, 0, -9]}

    @pytest.mark.timeout(30)
    def test_config_file(self, cli_runner, tmp_path):
        config = tmp_path / "pseudou.yml"
        config.write_text("output: table\n")
        result = cli_runner.invoke(main, ["--config", str(config), "theta", "--p", "5"])
        assert result.exit_code == 0
        assert result.output.split() == ["theta", "5"]


class TestErrors:
    @pytest.mark.timeout(30)
    def test_malformed_json(self, cli_runner):
        result = cli_runner.invoke(main, ["dgw-phase"], input="{\"matrix\": [")
        assert result.exit_code == 2
        assert "[2]: malformed JSON" in result.output

    @pytest.mark.timeout(30)
    def test_precondition_exit_code(self, cli_runner):
        result = cli_runner.invoke(main, ["signature", "--g", "2", "--p", "6"])
        assert result.exit_code == 2
        document = {"matrix": [[2, 0], [0, 1]], "form": {"m": 1, "n": 1}}
        result = cli_runner.invoke(main, ["dgw-phase"], input=json.dumps(document))
        assert result.exit_code == 2

    @pytest.mark.timeout(30)
    def test_bad_letters(self, cli_runner):
        result = cli_runner.invoke(main, ["burau", "--k", "3", "--order", "5", "--letters", "1,x"])
        assert result.exit_code == 2


class TestReproduce:
    @pytest.mark.timeout(120)
    def test_selected_checks(self, cli_runner):
        results = _run(cli_runner, ["reproduce-paper", "--only", "1", "--only", "5", "--only", "6"])
        assert [r["check"] for r in results] == [1, 5, 6]
        assert all(r["passed"] for r in results)

    @pytest.mark.timeout(30)
    def test_raising_checks_are_failures(self, mocker):
        def passing(config, samples):
            return True, "ok"

        def precondition(config, samples):
            raise DomainError("bad level")

        def crashing(config, samples):
            raise ZeroDivisionError("division by zero")

        mocker.patch.object(
            checks, "CHECKS", ((1, "passing", passing), (2, "domain", precondition), (3, "crash", crashing))
        )
        spy = mocker.spy(checks.logger, "exception")
        results = checks.run_checks(RunConfig())
        assert [r.passed for r in results] == [True, False, False]
        assert results[1].detail == "bad level"
        assert results[2].detail == "ZeroDivisionError: division by zero"
        assert spy.call_count == 1
        assert [r.check for r in checks.run_checks(RunConfig(), only=[3])] == [3]

    @pytest.mark.timeout(600)
    def test_phase_check_over_all_samples(self):
        passed, detail = checks.check_phase(RunConfig())
        assert passed, detail

    @pytest.mark.timeout(600)
    def test_commutator_check_over_all_samples(self):
        passed, detail = checks.check_commutators(RunConfig())
        assert passed, detail
