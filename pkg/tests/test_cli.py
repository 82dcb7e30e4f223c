# proj/tests/test_cli.py

import json
import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.cli.main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from src.cli.reports import read_spectrum
from src.cli.verification import CHECKS, VerificationSuite
from src.core.exceptions import UsageError


class TestSpectraCommand:
    def test_dirac_rows(self, config, capsys):
        assert main(["spectra", "--n", "3", "--j", "0", "--lmax", "2"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 6
        assert rows[0] == {
            "n": 3,
            "j": 0,
            "l": 0,
            "series": "mu",
            "sign": 1,
            "eigenvalue_num": 3,
            "eigenvalue_den": 2,
            "multiplicity": 2,
        }

    def test_higher_spin_rows(self, config, capsys):
        assert main(["spectra", "--n", "4", "--j", "1", "--lmax", "1"]) == EXIT_OK
        assert len(json.loads(capsys.readouterr().out)) == 4

    def test_index_out_of_range(self, config, capsys):
        assert main(["spectra", "--n", "4", "--j", "2"]) == EXIT_USAGE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "0 < j < n/2" in captured.err

    def test_csv_file_round_trip(self, config, tmp_path):
        target = tmp_path / "rs.csv"
        assert main(["spectra", "--n", "5", "--j", "1", "--lmax", "3", "--format", "csv", "--output", str(target)]) == 0
        rows = read_spectrum(target)
        assert len(rows) == 12
        assert {r.series for r in rows} == {"mu1", "mu2"}

    def test_output_is_deterministic(self, config, capsys):
        main(["spectra", "--n", "6", "--j", "2", "--lmax", "4", "--format", "text"])
        first = capsys.readouterr().out
        main(["spectra", "--n", "6", "--j", "2", "--lmax", "4", "--format", "text"])
        assert capsys.readouterr().out == first

    def test_unknown_format(self, config, capsys):
        assert main(["spectra", "--n", "3", "--format", "xml"]) == EXIT_USAGE

    def test_missing_subcommand(self, config, capsys):
        assert main([]) == EXIT_USAGE


class TestSolveCommand:
    def test_monogenic_dimension(self, config, capsys):
        assert main(["solve", "--m", "4", "--k", "1", "--kind", "monogenic"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["dim"] == 12

    def test_constants(self, config, capsys):
        assert main(["solve", "--m", "3", "--k", "0", "--kind", "monogenic"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["dim"] == 2

    def test_rs_decomposition(self, config, capsys):
        assert main(["solve", "--m", "4", "--k", "1", "--kind", "rs", "--decompose"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)["decomposition"]
        assert (report["dim_m1"], report["dim_m2"], report["dim_m3"]) == (8, 24, 4)
        assert report["direct_sum"]

    def test_cap_exceeded(self, config, capsys):
        assert main(["solve", "--m", "9", "--k", "1"]) == EXIT_USAGE

    def test_unknown_kind(self, config, capsys):
        assert main(["solve", "--m", "4", "--k", "1", "--kind", "twistor"]) == EXIT_USAGE


class TestIndexCommand:
    @pytest.mark.parametrize("operator, expected", [("D_1/2", 2), ("D_3/2", -38), ("D_T", -40)])
    def test_k3(self, config, capsys, sample_dir, operator, expected):
        code = main(["index", "--operator", operator, "--descriptor", str(sample_dir / "k3.json")])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["index"] == {"num": expected, "den": 1}

    def test_zero_descriptor(self, config, capsys, sample_dir):
        code = main(["index", "--operator", "D_j", "--j", "2", "--descriptor", str(sample_dir / "zero_dim8.json")])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["index"] == {"num": 0, "den": 1}
        assert report["forms"]["j"] == 2

    def test_malformed_descriptor(self, config, capsys, sample_dir):
        path = sample_dir / "malformed_descriptor.json"
        assert main(["index", "--descriptor", str(path)]) == EXIT_INPUT
        error = json.loads(capsys.readouterr().out)
        assert error["error"] == "input_file"
        assert error["path"] == str(path)

    def test_symbolic_report(self, config, capsys):
        assert main(["index", "--operator", "D_3/2", "--dim", "4"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["symbolic_class"] == "19/24*p1"
        assert report["index"] is None

    def test_unknown_operator(self, config, capsys):
        assert main(["index", "--operator", "D_5/2"]) == EXIT_USAGE


class TestVerifyCommand:
    def test_alias_selects_block_checks(self, config, capsys):
        assert main(["verify", "--only", "theorem1", "--scale", "quick"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert [c["name"] for c in report["checks"]] == ["block-form"]
        assert report["passed"]

    def test_dim8_audit(self, config, capsys):
        assert main(["verify", "--only", "dim8-audit"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        details = report["checks"][0]["details"]
        assert details["relation_recomputed"] == [{"num": 249, "den": 1}, {"num": -1, "den": 4}]
        assert details["relation_printed"] == [{"num": 249, "den": 1}, {"num": -7, "den": 48}]

    def test_several_checks_in_registry_order(self, config, capsys):
        code = main(["verify", "--scale", "quick", "--only", "weyl", "--only", "multiplicity-integrality"])
        assert code == EXIT_OK
        names = [c["name"] for c in json.loads(capsys.readouterr().out)["checks"]]
        assert names == ["multiplicity-integrality", "weyl"]

    def test_repeated_runs_print_identical_reports(self, config, capsys):
        args = ["verify", "--scale", "quick", "--only", "block-form", "--only", "weyl"]
        assert main(args) == EXIT_OK
        first = capsys.readouterr().out
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_unknown_check(self, config, capsys):
        assert main(["verify", "--only", "no-such-check"]) == EXIT_USAGE

    def test_failed_check_sets_exit_code(self, config, capsys, monkeypatch):
        from src.cli.verification import CheckResult

        monkeypatch.setitem(CHECKS, "weyl", lambda cfg, rng: CheckResult(name="weyl", passed=False, details={}))
        assert main(["verify", "--only", "weyl", "--scale", "quick"]) == EXIT_FAILED

    def test_unknown_scale(self, config):
        with pytest.raises(UsageError):
            VerificationSuite(config).process({"scale": "huge"})

    @pytest.mark.parametrize("name", sorted(CHECKS))
    def test_quick_scale(self, config, name):
        report = VerificationSuite(config).process({"scale": "quick", "only": [name]})
        assert report.passed, report.checks[0].details


if __name__ == "__main__":
    pytest.main([__file__])
