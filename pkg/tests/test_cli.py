import json

import pytest

from core.base import ExitCode, RunReport
from main import build_parser, run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestRunReport:
    def test_exit_codes(self):
        assert RunReport("x").exit_code is ExitCode.OK
        assert RunReport("x", passed=True).exit_code is ExitCode.OK
        assert RunReport("x", passed=False).exit_code is ExitCode.FAIL

    def test_status(self):
        assert RunReport("x").status == "DONE"
        assert RunReport("x", passed=False).status == "FAIL"

    def test_json_without_meta(self):
        report = RunReport("constants show", results={"b": 1, "a": "2"}, elapsed=1.5)
        data = json.loads(report.to_json(no_meta=True))
        assert data["schema"] == 1
        assert "meta" not in data
        assert json.loads(report.to_json())["meta"]["elapsed"] == "1.500"

    def test_text_lines_flatten(self):
        report = RunReport("x", results={"a": {"b": [{"c": 1}]}}, passed=True)
        assert report.text_lines() == ["a.b[0].c: 1", "status: PASS"]


class TestParser:
    def test_groups_are_registered(self):
        parser, commands = build_parser()
        assert {c.get_name() for c in commands} == {"constants", "spectra", "verify", "dimension"}
        args = parser.parse_args(["verify", "recursive", "--count", "3", "--json"])
        assert args.count == 3 and args.json

    def test_certified_follows_closed_form_method(self):
        _, commands = build_parser()
        verify = next(c for c in commands if c.get_name() == "verify")
        assert verify.is_certified("closed-form", {"method": "exact"})
        assert not verify.is_certified("closed-form", {"method": "numerical"})
        assert verify.is_certified("lemmas", {})


class TestCli:
    def test_single_constant(self, capsys):
        code, out, _ = _run(capsys, "constants", "show", "--name", "f", "--digits", "14")
        assert code == 0
        assert out.strip() == "3.11812017815984"

    def test_all_constants_check_the_sandwich(self, capsys):
        code, out, _ = _run(capsys, "constants", "show", "--digits", "14")
        assert code == 0
        assert "c_inf: 3.11812017814369" in out
        assert "FAIL" not in out

    def test_json_is_deterministic_without_meta(self, capsys):
        argv = ("spectra", "lagrange", "--word", "1_2 2_2", "--json", "--no-meta", "--digits", "12")
        first = _run(capsys, *argv)[1]
        second = _run(capsys, *argv)[1]
        assert first == second
        data = json.loads(first)
        assert data["schema"] == 1
        assert data["status"] == "DONE"
        assert data["results"]["lagrange"]["value_decimal"] == "2.973213749463"

    def test_lambda_of_named_sequence(self, capsys):
        code, out, _ = _run(capsys, "spectra", "lambda", "--seq", "f", "--pos", "0",
                            "--digits", "14", "--json", "--no-meta")
        assert code == 0
        assert json.loads(out)["results"]["lambda"]["value_decimal"] == "3.11812017815984"

    def test_long_flag_aliases(self, capsys):
        short = _run(capsys, "spectra", "lambda", "--seq", "f", "--pos", "3", "--json", "--no-meta")
        long = _run(capsys, "spectra", "lambda", "--sequence", "f", "--index", "3", "--json", "--no-meta")
        assert short[0] == long[0] == 0
        assert json.loads(short[1])["results"] == json.loads(long[1])["results"]
        assert json.loads(short[1])["results"]["index"] == 3

    def test_negative_position(self, capsys):
        code, out, _ = _run(capsys, "spectra", "lambda", "--seq", "f", "--pos", "-9", "--json", "--no-meta")
        assert code == 0
        assert json.loads(out)["results"]["index"] == -9

    def test_markov_certificate_is_replayed(self, capsys):
        code, out, _ = _run(capsys, "spectra", "markov", "--seq", "f", "--json", "--no-meta")
        assert code == 0
        data = json.loads(out)
        assert data["results"]["replayed"] is True
        assert data["status"] == "PASS"

    def test_lemma_tables(self, capsys):
        code, out, _ = _run(capsys, "verify", "lemmas", "--table", "f2")
        lines = out.strip().splitlines()
        assert code == 1
        assert len(lines) == 7
        failed = [line for line in lines if line.startswith("FAIL")]
        assert len(failed) == 1 and failed[0].startswith("FAIL  (19)")
        assert "[勘误]" in failed[0]
        conclusion = [line for line in lines if "[仅低于结论阈值]" in line]
        assert [line.split()[1] for line in conclusion] == ["(15)", "(16)", "(21)"]

    def test_custom_constraint_file(self, capsys, tmp_path):
        path = tmp_path / "window.json"
        path.write_text(json.dumps({
            "range": [-2, 2],
            "caps": [{"positions": [0], "bound": "3.15"}],
        }), encoding="utf-8")
        code, out, _ = _run(capsys, "verify", "window", "--constraints", str(path), "--json", "--no-meta")
        assert code == 0
        assert json.loads(out)["results"]["search"]["range"] == [-2, 2]

    def test_dimension_bounds(self, capsys, tmp_path):
        csv_path = tmp_path / "scales.csv"
        code, out, _ = _run(capsys, "dimension", "bounds", "--depth", "3", "--csv", str(csv_path),
                            "--json", "--no-meta")
        assert code == 0
        assert json.loads(out)["results"]["intervals"] == 8
        assert csv_path.exists()

    def test_closed_form_reports_certification(self, capsys):
        code, out, _ = _run(capsys, "verify", "closed-form", "--json", "--no-meta")
        data = json.loads(out)
        assert code == 0
        assert data["certified"] is (data["results"]["method"] == "exact")


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("nope",),
            ("constants", "show", "--name", "phi"),
            ("constants", "show", "--digits", "500"),
            ("spectra", "lambda", "--seq", "over(1) ; 3 ;", "--pos", "0"),
            ("spectra", "lagrange", "--word", "1 3"),
            ("dimension", "bounds", "--alphabet", "1;1 2"),
            ("verify", "window", "--preset", "lf4", "--node-guard", "5"),
            ("verify", "closed-form", "--digits", "10"),
        ],
    )
    def test_exit_two(self, capsys, argv):
        code, out, err = _run(capsys, *argv)
        assert code == ExitCode.USAGE
        assert out == ""

    def test_bad_registry(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{}", encoding="utf-8")
        code, _, err = _run(capsys, "constants", "show", "--name", "f", "--registry", str(path))
        assert code == ExitCode.USAGE
        assert "error" in err

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
