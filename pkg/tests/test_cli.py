import io
import types
from pathlib import Path

import pytest

from alphamean.cli import main

DATA = Path(__file__).parent / "data"


def run(args, stdin: bytes = b"", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr("sys.stdin", types.SimpleNamespace(buffer=io.BytesIO(stdin)))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


class TestAverage:
    def test_arithmetic_on_stdin(self, monkeypatch, capsys):
        code, out, err = run(["average", "--family", "arithmetic"], b"1\n2\n3\n", monkeypatch, capsys)
        assert code == 0
        assert out == "2\n"

    def test_exponential_needs_alpha(self, monkeypatch, capsys):
        code, out, err = run(["average", "--family", "exponential"], b"1\n2\n", monkeypatch, capsys)
        assert code == 2
        assert "alpha" in err

    def test_exponential(self, monkeypatch, capsys):
        code, out, _ = run(
            ["average", "--family", "exponential", "--alpha", "0.5"], b"1\n2\n3\n", monkeypatch, capsys
        )
        assert code == 0
        assert out == "2.25\n"

    def test_binomial(self, monkeypatch, capsys):
        code, out, _ = run(
            ["average", "--family", "binomial", "--mu", "1", "--nu", "0"], b"1\n2\n3\n", monkeypatch, capsys
        )
        assert code == 0
        assert out == f"{14 / 6:.6g}\n"

    def test_bad_number_is_input_error(self, monkeypatch, capsys):
        code, _, err = run(["average"], b"1\npotato\n", monkeypatch, capsys)
        assert code == 2
        assert "line 2" in err

    def test_empty_input(self, monkeypatch, capsys):
        code, _, err = run(["average"], b"", monkeypatch, capsys)
        assert code == 2


class TestMoving:
    def test_arithmetic_window(self, monkeypatch, capsys):
        code, out, _ = run(
            ["moving", "--window", "3", "--family", "arithmetic"], b"1\n2\n3\n4\n5\n", monkeypatch, capsys
        )
        assert code == 0
        assert out == "2\n3\n4\n"

    def test_window_too_large(self, monkeypatch, capsys):
        code, _, err = run(["moving", "--window", "9"], b"1\n2\n", monkeypatch, capsys)
        assert code == 2


class TestEmaCommand:
    def test_ema_from_file(self, tmp_path, capsys):
        path = tmp_path / "closes.csv"
        path.write_bytes(b"date,close\nd1,1\nd2,2\nd3,3\n")
        code = main(["ema", "--n", "3", "--input", str(path)])
        out, _ = capsys.readouterr()
        assert code == 0
        assert out == "2.25\n"

    def test_missing_file(self, capsys):
        code = main(["ema", "--n", "3", "--input", "no-such-file.csv"])
        _, err = capsys.readouterr()
        assert code == 2
        assert "no-such-file" in err


class TestMacdCommand:
    def test_report_on_golden_input(self, capsys):
        code = main(["macd", "--input", str(DATA / "closes_80.csv")])
        out, _ = capsys.readouterr()
        assert code == 0
        assert out.encode("utf-8") == (DATA / "macd_report_80.csv").read_bytes()

    def test_default_flags_are_12_26_9_rho2(self, capsys):
        code = main(
            ["macd", "--input", str(DATA / "closes_80.csv"), "--n1", "12", "--n2", "26",
             "--n0", "9", "--rho", "2", "--orientation", "oldest-first", "--format", "csv"]
        )
        out, _ = capsys.readouterr()
        assert code == 0
        assert out.encode("utf-8") == (DATA / "macd_report_80.csv").read_bytes()

    def test_json_format(self, tmp_path, capsys):
        path = tmp_path / "closes.csv"
        path.write_bytes(b"date,close\nd1,10\nd2,11\nd3,9\n")
        code = main(["macd", "--input", str(path), "--n1", "2", "--n2", "4", "--n0", "2", "--format", "json"])
        out, _ = capsys.readouterr()
        assert code == 0
        import json

        parsed = json.loads(out)
        assert parsed["meta"]["n1"] == 2
        assert len(parsed["rows"]) == 3

    def test_invalid_config_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "closes.csv"
        path.write_bytes(b"date,close\nd1,10\nd2,11\n")
        code = main(["macd", "--input", str(path), "--n1", "26", "--n2", "12"])
        _, err = capsys.readouterr()
        assert code == 2
        assert "short length" in err

    def test_malformed_row_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "closes.csv"
        path.write_bytes(b"date,close\nd1,-10\n")
        code = main(["macd", "--input", str(path)])
        _, err = capsys.readouterr()
        assert code == 2
        assert "line 2" in err

    def test_youngest_first_orientation(self, tmp_path, capsys):
        oldest = tmp_path / "oldest.csv"
        oldest.write_bytes(b"date,close\nd1,10\nd2,11\nd3,9\n")
        youngest = tmp_path / "youngest.csv"
        youngest.write_bytes(b"date,close\nd3,9\nd2,11\nd1,10\n")
        args = ["--n1", "2", "--n2", "4", "--n0", "2"]
        code = main(["macd", "--input", str(oldest)] + args)
        out_a, _ = capsys.readouterr()
        code2 = main(["macd", "--input", str(youngest), "--orientation", "youngest-first"] + args)
        out_b, _ = capsys.readouterr()
        assert code == code2 == 0
        assert out_a == out_b


class TestVerifyBound:
    def test_holds_for_rho_two(self, capsys):
        code = main(["verify-bound", "--rho", "2", "--n", "12"])
        out, _ = capsys.readouterr()
        assert code == 0
        assert "0.134708" in out
        assert "0.135335" in out

    def test_fails_for_small_rho(self, capsys):
        code = main(["verify-bound", "--rho", "1", "--n", "500"])
        out, _ = capsys.readouterr()
        assert code == 1
        assert "0.368247" in out
        assert "0.367879" in out

    def test_out_of_range_rho_is_input_error(self, capsys):
        code = main(["verify-bound", "--rho", "14", "--n", "12"])
        _, err = capsys.readouterr()
        assert code == 2


class TestOracleCommand:
    def test_closed_form(self, capsys):
        code = main(["oracle", "--family", "weighted", "--n", "4"])
        out, _ = capsys.readouterr()
        assert code == 0
        assert out == "3\n"

    def test_decaying_value(self, capsys):
        code = main(["oracle", "--s", "2", "--beta", "0.5"])
        out, _ = capsys.readouterr()
        assert code == 0
        assert out == "0.125\n"

    def test_needs_some_mode(self, capsys):
        code = main(["oracle"])
        _, err = capsys.readouterr()
        assert code == 2


class TestParser:
    def test_unknown_flag_exits_2(self, capsys):
        code = main(["average", "--no-such-flag"])
        assert code == 2

    def test_unknown_subcommand_exits_2(self, capsys):
        code = main(["frobnicate"])
        assert code == 2

    def test_deterministic_output(self, monkeypatch, capsys):
        code1, out1, _ = run(["average"], b"5\n6\n7\n", monkeypatch, capsys)
        code2, out2, _ = run(["average"], b"5\n6\n7\n", monkeypatch, capsys)
        assert (code1, out1) == (code2, out2)
