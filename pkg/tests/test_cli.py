"""Tests for the command-line surface, its output formats and exit codes"""
import csv
import io
import json
import os

import pytest

from rookcalc.cli import commands, parse_args
from rookcalc.config import load_preset, parse_presets
from rookcalc.errors import InvalidParameterError
from rookcalc.main import run
from rookcalc.qlaurent import ONE, ZERO, parse, to_string
from rookcalc.report import IdentityReport
from rookcalc.stirling import stirling_s


GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def golden(name: str) -> str:
    with open(os.path.join(GOLDEN, name), newline="") as f:
        return f.read()


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:

    @pytest.mark.parametrize("argv,name", [
        (["table", "--kind", "s", "--s", "0", "--q", "1", "--n-max", "5", "--format", "csv"], "table_s0_q1.csv"),
        (["table", "--kind", "s", "--s", "1", "--q", "1", "--n-max", "4"], "table_s1_q1.txt"),
        (["table", "--kind", "type2", "--alpha", "0", "--beta", "1", "--rho", "0", "--q", "1", "--n-max", "4"],
         "table_type2_q1.txt"),
    ])
    def test_golden(self, capsys, argv, name):
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        assert out == golden(name)

    def test_deterministic(self, capsys):
        argv = ["table", "--kind", "cd", "--s", "2", "--c", "1", "--d", "1", "--n-max", "5", "--format", "json"]
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second

    def test_csv_and_json_agree(self, capsys):
        base = ["table", "--kind", "s", "--s", "-1", "--n-max", "4"]
        _, csv_out, _ = invoke(capsys, *base, "--format", "csv")
        _, json_out, _ = invoke(capsys, *base, "--format", "json")
        from_csv = {(int(row["n"]), int(row["k"])): row["value"] for row in csv.DictReader(io.StringIO(csv_out))}
        document = json.loads(json_out)
        from_json = {(row["n"], row["k"]): row["value"] for row in document["rows"]}
        assert from_csv == from_json
        assert document["params"] == {"s": -1}
        assert parse(from_json[(4, 2)]) == stirling_s(4, 2, -1)

    def test_rational_evaluation(self, capsys):
        code, out, _ = invoke(capsys, "table", "--kind", "s", "--s", "0", "--q", "1/2", "--n-max", "2")
        assert code == 0
        assert out.splitlines()[2] == "2: 0, 1, 1/2"

    def test_cross_check(self, capsys):
        code, out, _ = invoke(capsys, "table", "--kind", "type2", "--alpha", "1", "--beta", "2", "--rho", "1",
                              "--n-max", "5", "--cross-check")
        assert code == 0
        assert out.startswith("0: 1\n")

    def test_cross_check_mismatch(self, capsys, monkeypatch):
        monkeypatch.setattr(commands, "rook_sum", lambda *args, **kwargs: ZERO)
        code, out, err = invoke(capsys, "table", "--kind", "s", "--s", "0", "--n-max", "2", "--cross-check")
        assert code == 2
        assert out == ""
        assert "rook placements give 0" in err

    def test_size_caps(self, capsys):
        assert invoke(capsys, "table", "--n-max", "21")[0] == 4
        assert invoke(capsys, "table", "--n-max", "9", "--cross-check")[0] == 4

    @pytest.mark.parametrize("argv", [
        ["table", "--n-max", "x"],
        ["table", "--n-max", "-1"],
        ["table", "--kind", "third", "--n-max", "2"],
        ["table", "--n-max", "2", "--q", "one"],
        ["table", "--n-max", "2", "--format", "xml"],
        ["table"],
        ["frobnicate"],
    ])
    def test_invalid(self, capsys, argv):
        code, out, err = invoke(capsys, *argv)
        assert code == 3
        assert out == ""
        assert err.startswith("error:")

    def test_zero_evaluation(self, capsys):
        code, _, _ = invoke(capsys, "table", "--kind", "cd", "--c", "-1", "--n-max", "3", "--q", "0")
        assert code == 3

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out, _ = invoke(capsys, "table", "--s", "0", "--q", "1", "--n-max", "5", "--format", "csv",
                              "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text() == golden("table_s0_q1.csv")


class TestBell:

    def test_bell_numbers(self, capsys):
        code, out, _ = invoke(capsys, "bell", "--s", "0", "--q", "1", "--n-max", "8")
        assert code == 0
        assert [line.split(": ")[1] for line in out.splitlines()] == \
            ["1", "1", "2", "5", "15", "52", "203", "877", "4140"]

    def test_factorials(self, capsys):
        _, out, _ = invoke(capsys, "bell", "--s", "1", "--q", "1", "--n-max", "5", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["value"] for row in rows] == ["1", "1", "2", "6", "24", "120"]

    def test_symbolic(self, capsys):
        _, out, _ = invoke(capsys, "bell", "--s", "0", "--n-max", "2")
        assert out == golden("bell_s0_symbolic.txt")

    def test_type2_inferred_from_flags(self, capsys):
        _, typed, _ = invoke(capsys, "bell", "--alpha", "0", "--beta", "1", "--rho", "0", "--q", "1",
                             "--n-max", "6", "--format", "json")
        document = json.loads(typed)
        assert document["kind"] == "type2"
        assert [row["value"] for row in document["values"]] == ["1", "1", "2", "5", "15", "52", "203"]

    def test_x_value(self, capsys):
        _, out, _ = invoke(capsys, "bell", "--s", "0", "--q", "1", "--x", "2", "--n-max", "3")
        assert out.splitlines()[3] == "3: 22"

    def test_cap(self, capsys):
        assert invoke(capsys, "bell", "--n-max", "21")[0] == 4


class TestOracle:

    def test_staircase(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "--board", "word=VUVUVUVUVU;pre=1", "--rooks", "3",
                              "--rule", "same-row", "--s", "2")
        assert code == 0
        assert out == to_string(stirling_s(5, 2, 2)) + "\n"

    def test_no_rooks(self, capsys):
        _, out, _ = invoke(capsys, "oracle", "--board", "word=VUVUVUVU;pre=1", "--rooks", "0")
        assert out == "q^6\n"

    def test_infeasible(self, capsys):
        _, out, _ = invoke(capsys, "oracle", "--board", "word=VUVU", "--rooks", "5")
        assert out == "0\n"

    def test_json(self, capsys):
        _, out, _ = invoke(capsys, "oracle", "--board", "word=UV;pre=3", "--rooks", "1", "--format", "json")
        document = json.loads(out)
        assert document["value"] == "1 + q + q^2"
        assert document["poly"] == {"0": "1", "1": "1", "2": "1"}
        assert document["rule"] == "same-row"

    def test_parse_error(self, capsys):
        assert invoke(capsys, "oracle", "--board", "word=VUQ", "--rooks", "1")[0] == 3

    def test_size_cap(self, capsys, monkeypatch):
        monkeypatch.setattr(commands, "ORACLE_PLACEMENT_CAP", 10)
        assert invoke(capsys, "oracle", "--board", "word=" + "VU" * 6, "--rooks", "2")[0] == 4


class TestVerify:

    def test_golden(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--identity", "katriel", "--n-max", "1", "--m-max", "1")
        assert code == 0
        assert out == golden("verify_katriel.txt")

    def test_spivey_general(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--identity", "spivey_general", "--n-max", "3", "--m-max", "3",
                              "--s", "-1..2")
        assert code == 0
        assert out.splitlines()[-1].endswith(" 0 failed, 0 held only after repair")

    def test_unknown_identity(self, capsys):
        code, out, err = invoke(capsys, "verify", "--identity", "nosuch")
        assert code == 3
        assert out == ""
        assert "nosuch" in err

    def test_failure_exit_code(self, capsys, monkeypatch):
        bad = IdentityReport(
            identity="katriel", params=(("n", 1), ("m", 1)), holds=False,
            lhs=ONE, rhs=ZERO, diff=ONE,
        )
        monkeypatch.setattr(commands, "run_sweep", lambda *args, **kwargs: [bad])
        code, out, _ = invoke(capsys, "verify", "--identity", "katriel", "--failures-only")
        assert code == 1
        assert out == "katriel(n=1, m=1): FAILS [printed] lhs=1 rhs=0 diff=1\n1 checked, 1 failed, 0 held only after repair\n"

    def test_repairs_are_reported(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--identity", "mezo_dual", "--n-max", "2", "--m-max", "1",
                              "--format", "json")
        document = json.loads(out)
        assert code == 0
        assert document["summary"]["failed"] == 0
        assert document["summary"]["repaired"] >= 1
        variants = {(r["params"]["n"], r["params"]["m"]): r["variant"] for r in document["reports"]}
        assert variants[(2, 1)] == "reduction_of_an"

    def test_preset_file(self, capsys, tmp_path):
        config = tmp_path / "presets.yaml"
        config.write_text("tiny:\n  max_total: 1\n  ranges:\n    n: 0..1\n    m: [0, 1]\n")
        code, out, _ = invoke(capsys, "verify", "--identity", "katriel", "--preset", "tiny",
                              "--config", str(config), "--format", "csv")
        assert code == 0
        assert len(list(csv.DictReader(io.StringIO(out)))) == 3

    def test_unknown_preset(self, capsys):
        assert invoke(capsys, "verify", "--identity", "katriel", "--preset", "huge")[0] == 3


class TestParserAndConfig:

    def test_negative_values(self):
        config = parse_args(["verify", "--identity", "oh", "--s", "-1..2", "--alpha", "-2", "--n-max", "3"])
        assert config.ranges == {"s": "-1..2", "alpha": "-2", "n": "0..3"}
        assert config.get("identity") == "oh"

    def test_bad_flag(self):
        with pytest.raises(InvalidParameterError):
            parse_args(["table", "--n-max", "2", "--colour"])

    def test_presets(self):
        desk = load_preset("desk")
        assert desk.max_total == 6
        assert desk.ranges["s"] == (-1, 3)
        assert desk.to_spec().values("x0") == range(0, 3)

    def test_bad_yaml(self):
        with pytest.raises(InvalidParameterError):
            parse_presets("tiny: [1, 2")
        with pytest.raises(InvalidParameterError):
            parse_presets("tiny:\n  ranges:\n    n: a..b\n")

    def test_env_config(self, monkeypatch, tmp_path):
        config = tmp_path / "presets.yaml"
        config.write_text("desk:\n  ranges:\n    n: 0..1\n")
        monkeypatch.setenv("ROOKCALC_CONFIG", str(config))
        assert load_preset("desk").ranges == {"n": (0, 1)}
        assert load_preset("desk").max_total is None
