"""
Integration tests for the qdepth command line.

Covers:
- Every command end to end through main()
- Exit codes for parse, configuration, domain and resource-cap errors
- Decimal-string integers in JSON output
- Byte-identical output across repeated runs
- Error responses on stderr, nothing on stdout

Commands run in-process; output is captured in a StringIO and stderr through capsys.
"""
import json
from io import StringIO

import pytest

from qdepth.cli.main import main

EXAMPLE = ["--n", "2", "--ideal", "x1^2, x1*x2^2"]


def run(argv):
    out = StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def error_of(capsys):
    lines = [line for line in capsys.readouterr().err.splitlines() if line.startswith("{")]
    return json.loads(lines[-1])


class TestQDepthCommand:
    def test_quotient(self):
        code, text = run(["qdepth", *EXAMPLE])
        assert code == 0
        report = json.loads(text)
        assert report["module"] == "quotient"
        assert report["value"] == "0"
        assert report["n_added"] == "2"
        assert report["n_effective"] == "4"
        assert report["witness_d"] == "2"
        assert report["witness"] == ["1", "2", "2"]
        assert report["blocker"] == {"d": "3", "k": "3", "value": "-1"}
        assert report["alpha"] == ["1", "4", "5", "1", "0"]

    def test_ideal_module(self):
        code, text = run(
            ["qdepth", "--n", "6", "--ideal", "x1*x2, x2*x3, x3*x4, x4*x5", "--module", "ideal"]
        )
        assert code == 0
        assert json.loads(text)["value"] == "5"

    def test_pair_module(self):
        code, text = run(
            ["qdepth", "--n", "2", "--ideal", "x1*x2", "--module", "pair", "--j-ideal", "x1"]
        )
        assert code == 0
        assert json.loads(text)["value"] == "1"

    def test_output_is_byte_identical(self):
        assert run(["qdepth", *EXAMPLE]) == run(["qdepth", *EXAMPLE])

    def test_ideal_file(self, tmp_path):
        path = tmp_path / "ideal.txt"
        path.write_text("x1^2, x1*x2^2\n")
        code, text = run(["qdepth", "--n", "2", "--ideal-file", str(path)])
        assert code == 0
        assert json.loads(text)["value"] == "0"


class TestErrors:
    def test_parse_error(self, capsys):
        code, text = run(["qdepth", "--n", "2", "--ideal", "x1, y2"])
        assert code == 2
        assert text == ""
        error = error_of(capsys)
        assert error["success"] is False
        assert error["exit_code"] == 2
        assert error["errors"][0]["code"] == "PARSE_ERROR"

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(["qdepth", "--n", "2", "--ideal-file", str(tmp_path / "missing")])
        assert code == 2
        assert error_of(capsys)["errors"][0]["code"] == "PARSE_ERROR"

    def test_empty_module(self, capsys):
        code, _ = run(["qdepth", "--n", "2", "--ideal", "x1", "--module", "pair", "--j-ideal", "x1"])
        assert code == 3
        assert error_of(capsys)["errors"][0]["code"] == "EMPTY_POSET"

    def test_not_contained(self, capsys):
        code, _ = run(
            ["qdepth", "--n", "2", "--ideal", "x1", "--module", "pair", "--j-ideal", "x1*x2"]
        )
        assert code == 3
        assert error_of(capsys)["errors"][0]["code"] == "NOT_CONTAINED"

    def test_resource_cap(self, capsys):
        code, _ = run(["sdepth", "--n", "5", "--ideal", "x1*x2", "--max-n", "3"])
        assert code == 4
        error = error_of(capsys)
        assert error["errors"][0]["code"] == "POSET_TOO_LARGE"
        assert error["errors"][0]["details"] == {"n": "5", "cap": "3"}

    def test_configuration_error(self, capsys, monkeypatch):
        monkeypatch.setenv("QDEPTH_MAX_N", "0")
        code, _ = run(["qdepth", *EXAMPLE])
        assert code == 2
        error = error_of(capsys)
        assert error["errors"][0]["code"] == "CONFIG_ERROR"
        assert error["errors"][0]["field"] == "QDEPTH_MAX_N"

    def test_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_degree_overflow(self, capsys):
        code, _ = run(["ci-symmetry", "--n", "3", "--degs", "2,2"])
        assert code == 3
        assert error_of(capsys)["errors"][0]["code"] == "DEGREE_OVERFLOW"


class TestAlphaBeta:
    @pytest.mark.parametrize("method", ["inclusion-exclusion", "enumeration"])
    def test_alpha(self, method):
        code, text = run(["alpha", *EXAMPLE, "--method", method])
        assert code == 0
        alpha = json.loads(text)
        assert alpha["counts"] == ["1", "4", "5", "1", "0"]
        assert alpha["n"] == "4"
        assert alpha["n_added"] == "2"
        assert alpha["method"] == method

    def test_beta(self):
        code, text = run(["beta", *EXAMPLE, "--d", "3"])
        assert code == 0
        table = json.loads(text)
        assert table["entries"] == ["1", "1", "0", "-1"]
        assert table["nonnegative"] is False
        assert table["blocker"] == {"d": "3", "k": "3", "value": "-1"}


def test_polarize():
    code, text = run(["polarize", *EXAMPLE])
    assert code == 0
    result = json.loads(text)
    assert result["n_polarized"] == "4"
    assert result["added"] == "2"
    assert result["var_map"] == [
        {"variable": 1, "replica": 2, "index": 3},
        {"variable": 2, "replica": 2, "index": 4},
    ]


def test_sdepth():
    code, text = run(["sdepth", "--n", "3", "--ideal", "x1, x2, x3", "--module", "ideal"])
    assert code == 0
    result = json.loads(text)
    assert result["value"] == "2"
    assert all(set(iv["lower"]) <= set(iv["upper"]) for iv in result["partition"])


class TestVeronese:
    def test_single(self):
        code, text = run(["veronese", "--n", "4", "--m", "2"])
        assert code == 0
        result = json.loads(text)
        assert (result["value"], result["quotient_value"], result["q"]) == ("2", "1", "0")

    def test_region_lines(self):
        code, text = run(["veronese", "--m-max", "1"])
        assert code == 0
        lines = text.splitlines()
        assert len(lines) == 12
        assert json.loads(lines[-1])["value"] == "6"

    def test_missing_arguments(self):
        assert run(["veronese", "--n", "4"])[0] == 2


class TestScanE:
    def test_csv(self):
        code, text = run(["scan-E", "--m-max", "2", "--q-max", "2"])
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "m,q,t,n,E,holds,proof_status"
        assert lines[1] == "1,1,1,3,0,true,m1-case"
        assert len(lines) == 7

    def test_jsonl(self):
        code, text = run(["scan-E", "--m-max", "1", "--q-max", "1", "--format", "jsonl"])
        assert code == 0
        assert json.loads(text) == {
            "m": "1",
            "q": "1",
            "t": "1",
            "n": "3",
            "E": "0",
            "holds": True,
            "proof_status": "m1-case",
        }

    def test_json_document(self):
        code, text = run(["scan-E", "--m-max", "2", "--q-max", "2", "--format", "json"])
        assert code == 0
        document = json.loads(text)
        assert document["violations"] == "0"
        assert len(document["cells"]) == 6
        assert document["cells"][0]["proof_status"] == "m1-case"
        assert all(cell["holds"] is True for cell in document["cells"])

    def test_start_and_workers(self):
        args = ["scan-E", "--m-max", "3", "--q-max", "4", "--start", "2,1,1"]
        code, serial = run(args)
        assert code == 0
        assert serial.splitlines()[1].startswith("2,1,1,")
        assert run([*args, "--workers", "2"]) == (0, serial)

    def test_bad_start(self):
        with pytest.raises(SystemExit):
            main(["scan-E", "--m-max", "2", "--q-max", "2", "--start", "1,2"])


class TestCISymmetry:
    def test_single(self):
        code, text = run(["ci-symmetry", "--n", "2", "--degs", "1,1"])
        assert code == 0
        report = json.loads(text)
        assert report["checks"][0]["entries"] == ["1", "-1"]
        assert report["checks"][0]["symmetric"] is True
        assert report["endpoint"] == "-1"

    def test_scan_is_seeded(self):
        args = ["--seed", "5", "ci-symmetry", "--scan", "--count", "5", "--n-max", "8"]
        code, text = run(args)
        assert code == 0
        assert len(text.splitlines()) == 5
        assert run(args) == (0, text)

    def test_missing_arguments(self):
        assert run(["ci-symmetry", "--n", "3"])[0] == 2


class TestSelftest:
    def test_golden_json(self):
        code, text = run(["selftest", "--tags", "golden", "--format", "json"])
        assert code == 0
        result = json.loads(text)
        assert result["status"] == "pass"
        assert result["passed"] == "8"
        assert result["failed"] == "0"

    def test_golden_table(self):
        code, text = run(["selftest", "--tags", "golden"])
        assert code == 0
        lines = text.splitlines()
        assert lines[0].startswith("CHECK")
        assert lines[-1] == "PASS: 8 passed, 0 failed"

    def test_unknown_tag_runs_nothing(self):
        code, text = run(["selftest", "--tags", "nothing", "--format", "json"])
        assert code == 0
        assert json.loads(text)["checks"] == []


def test_schema_command():
    code, text = run(["schema", "qdepth"])
    assert code == 0
    schema = json.loads(text)
    assert schema["properties"]["value"]["type"] == "string"


def test_metrics_file(tmp_path):
    path = tmp_path / "qdepth.prom"
    code, _ = run(["--metrics-file", str(path), "qdepth", *EXAMPLE])
    assert code == 0
    assert 'qdepth_commands_total{command="qdepth",status="ok"}' in path.read_text()
