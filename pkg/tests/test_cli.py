"""Tests for the pilift command line."""

import json

import pytest

from src.char_table.render import table_from_json
from src.char_table.table import character_table
from src.cli.main import EXIT_ANOMALIES, EXIT_OK, EXIT_USAGE, main
from src.config import get_settings
from src.group_core.builtins import builtin_group
from src.group_core.perm_io import write_perm_file
from src.models.reports import Anomaly, CorpusEntryReport, VerificationReport
from src.utils.errors import EngineAnomaly


def run_json(capsys, *args):
    status = main([*args, "--format", "json"])
    return status, json.loads(capsys.readouterr().out)


@pytest.mark.unit
class TestEngineCommands:
    def test_chartab(self, capsys):
        status, data = run_json(capsys, "chartab", "--group", "builtin:s3")
        assert status == EXIT_OK
        assert data["order"] == 6
        assert [row["degree"] for row in data["rows"]] == [1, 1, 2]
        assert [c["size"] for c in data["classes"]] == [1, 3, 2]

    def test_chartab_round_trip(self, capsys):
        status, data = run_json(capsys, "chartab", "--group", "builtin:c7:c3")
        assert status == EXIT_OK
        table = character_table(builtin_group("c7:c3"))
        assert table_from_json(data) == [list(chi.values) for chi in table.rows]

    def test_chartab_text(self, capsys):
        assert main(["chartab", "--group", "builtin:c3"]) == EXIT_OK

    def test_ipi(self, capsys):
        status, data = run_json(capsys, "ipi", "--group", "builtin:s3", "--pi", "3")
        assert status == EXIT_OK
        assert data["pi"] == [3]
        assert data["decomposition"] == [[1, 0], [1, 0], [0, 1]]

    def test_lifts(self, capsys):
        status, data = run_json(capsys, "lifts", "--group", "builtin:s3", "--pi", "3")
        assert status == EXIT_OK
        assert [m["lifts"] for m in data["members"]] == [[0, 1], [2]]

    def test_series(self, capsys):
        status, data = run_json(capsys, "series", "--group", "builtin:s3", "--pi", "3")
        assert status == EXIT_OK
        assert [s["orders"] for s in data["series"]] == [[1, 3, 6]]
        assert not data["truncated"]

    def test_pair(self, capsys):
        status, data = run_json(capsys, "pair", "--group", "builtin:s3", "--pi", "3", "--chi", "2")
        assert status == EXIT_OK
        assert data["pair"]["subgroup_order"] == 3
        assert data["towers_conjugate"]

    def test_pair_by_orders(self, capsys):
        status, data = run_json(capsys, "pair", "--group", "builtin:s3", "--pi", "3", "--orders", "1,3,6", "--chi", "1")
        assert status == EXIT_OK
        assert data["pair"]["subgroup_order"] == 6

    def test_inductive(self, capsys):
        status, data = run_json(
            capsys, "inductive", "--group", "builtin:s3", "--pi", "3", "--generator", "(1 2 3)", "--row", "1"
        )
        assert status == EXIT_OK
        assert data["subgroup_order"] == 3
        assert data["inductive"]

    def test_main1(self, capsys):
        status, data = run_json(capsys, "main1", "--group", "builtin:s3", "--pi", "3")
        assert status == EXIT_OK
        assert [r["verdict"] for r in data] == [True, True, True]

    def test_main2(self, capsys):
        status, data = run_json(capsys, "main2", "--group", "builtin:s3", "--pi", "3", "--member", "0")
        assert status == EXIT_OK
        assert data[0]["count"] == 2
        assert data[0]["holds"]

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "s3.json"
        assert main(["chartab", "--group", "builtin:s3", "--format", "json", "--output", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["order"] == 6

    def test_perm_file_source(self, tmp_path, capsys):
        path = tmp_path / "a4.perm"
        write_perm_file(builtin_group("a4"), path)
        status, data = run_json(capsys, "chartab", "--group", str(path))
        assert status == EXIT_OK
        assert data["group"] == "a4"
        assert data["order"] == 12


@pytest.mark.unit
class TestUsageErrors:
    def test_unknown_builtin(self, capsys):
        assert main(["chartab", "--group", "builtin:nope"]) == EXIT_USAGE
        assert "unknown builtin group" in capsys.readouterr().err

    def test_missing_file(self):
        assert main(["chartab", "--group", "/nonexistent/group.perm"]) == EXIT_USAGE

    def test_bad_pi(self):
        assert main(["ipi", "--group", "builtin:s3", "--pi", "4"]) == EXIT_USAGE

    def test_not_separable(self):
        assert main(["ipi", "--group", "builtin:s5", "--pi", "2"]) == EXIT_USAGE

    def test_row_out_of_range(self):
        assert main(["pair", "--group", "builtin:s3", "--pi", "3", "--chi", "7"]) == EXIT_USAGE

    def test_series_index_out_of_range(self):
        assert main(["pair", "--group", "builtin:s3", "--pi", "3", "--series", "5", "--chi", "0"]) == EXIT_USAGE

    def test_missing_option(self):
        assert main(["chartab"]) == EXIT_USAGE

    def test_order_cap(self):
        assert main(["--order-cap", "10", "chartab", "--group", "builtin:s4"]) == EXIT_USAGE


@pytest.mark.unit
class TestGlobalOptions:
    def test_config_file(self, tmp_path, capsys):
        config = tmp_path / "pilift.yaml"
        config.write_text("engine:\n  order_cap: 100\nverification:\n  series_cap: 3\n")
        assert main(["--config", str(config), "chartab", "--group", "builtin:c3"]) == EXIT_OK
        assert get_settings().order_cap == 100
        assert get_settings().verification.series_cap == 3

    def test_json_logging(self, capsys):
        assert main(["--log-format", "json", "--log-level", "DEBUG", "chartab", "--group", "builtin:c2"]) == EXIT_OK


@pytest.mark.integration
class TestVerifyCommand:
    def test_verify_builtins(self, capsys):
        status, data = run_json(capsys, "verify", "--group", "builtin:s3", "--group", "builtin:c3")
        assert status == EXIT_OK
        assert data["anomaly_count"] == 0
        assert [(e["order"], e["pi"]) for e in data["entries"]] == [(6, "{2}"), (6, "{3}"), (6, "{2,3}"), (3, "{3}")]

    def test_verify_file_with_pi(self, tmp_path, capsys):
        path = tmp_path / "s3.perm"
        write_perm_file(builtin_group("s3"), path)
        status, data = run_json(capsys, "verify", "--group", str(path), "--pi", "3")
        assert status == EXIT_OK
        assert len(data["entries"]) == 1

    def test_exit_statuses_are_distinct(self):
        assert len({EXIT_OK, EXIT_ANOMALIES, EXIT_USAGE}) == 3


@pytest.mark.unit
class TestAnomalyExitStatus:
    def test_verify_reports_anomalies(self, mocker, capsys):
        anomaly = Anomaly(check="ipi.count", message="count differs", witness={"group": "S3"})
        entry = CorpusEntryReport(group="S3", order=6, pi="{3}", series=["1<3<6"], anomalies=[anomaly])
        mocker.patch("src.cli.main.run_corpus", return_value=VerificationReport(entries=[entry]))
        status, data = run_json(capsys, "verify", "--group", "builtin:s3")
        assert status == EXIT_ANOMALIES
        assert data["anomaly_count"] == 1

    def test_engine_anomaly(self, mocker):
        mocker.patch("src.cli.main.character_table", side_effect=EngineAnomaly("fusion", "no match", {"class": 2}))
        assert main(["chartab", "--group", "builtin:s3"]) == EXIT_ANOMALIES
