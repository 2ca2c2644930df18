"""CLI contract tests: output shapes, exit codes, determinism, environment seed."""
import json
import subprocess
import sys

import pytest

from chromacap.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def bw2_file(tmp_path):
    path = tmp_path / "bw2.json"
    path.write_text('{"name":"bw2","colors":[[0,0,0],[255,255,255]]}')
    return str(path)


class TestEntropy:
    def test_paper_gain(self, capsys):
        code, out, _ = run_cli(capsys, "entropy", "14", "--vs", "8", "--mode", "paper")
        assert code == 0
        assert "delta_h=29.302969" in out

    def test_single_symbol(self, capsys):
        code, out, _ = run_cli(capsys, "entropy", "1")
        assert code == 0 and out.strip() == "h=0.0"

    def test_patterns(self, capsys):
        code, out, err = run_cli(capsys, "entropy", "4", "--patterns", "2")
        assert code == 0
        assert "h_joint=24.0 h_product=16.0" in out
        assert "non-additive" in err

    def test_domain_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "entropy", "0")
        assert code == 2 and "error" in err

    def test_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "entropy", "4", "--vs", "2", "--format", "json-lines")
        assert code == 0
        obj = json.loads(out)
        assert obj["h"] == 8.0 and obj["delta_h"] == 6.0  # 4*log2(4) - 2*log2(2)


class TestConstruct:
    def test_n2_summary(self, capsys, tmp_path):
        out_path = tmp_path / "pal.json"
        code, out, _ = run_cli(capsys, "construct", "2", "--out", str(out_path))
        assert code == 0
        assert out.strip() == "min_diff=765 a_r=0.000000"
        doc = json.loads(out_path.read_text())
        assert doc["name"] == "ms2-seed0" and len(doc["colors"]) == 2

    def test_stdout_document(self, capsys):
        code, out, err = run_cli(capsys, "construct", "4", "--restarts", "2")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["colors"]) == 4
        assert "min_diff=" in err

    def test_below_minimum_exits_2(self, capsys):
        assert run_cli(capsys, "construct", "1")[0] == 2

    def test_unwritable_path_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "construct", "2", "--out", "/nonexistent-dir/p.json")
        assert code == 3 and "I/O" in err

    def test_warns_beyond_validated_range(self, capsys):
        code, _, err = run_cli(capsys, "construct", "101", "--restarts", "1")
        assert code == 0 and "warning" in err


class TestEval:
    def test_explicit_file(self, capsys, bw2_file):
        code, out, _ = run_cli(capsys, "eval", bw2_file)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,min_diff,a_r,h_paper,h_shannon"
        assert lines[1] == "2,765,0.000000,2.0,1.0"

    def test_sized_only_builtin(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "HCCB8")
        assert code == 0
        assert out.strip().split("\n")[1] == "8,-,-,24.0,3.0"

    def test_multiple_inputs(self, capsys, bw2_file):
        code, out, _ = run_cli(capsys, "eval", bw2_file, "corners8")
        assert code == 0 and len(out.strip().split("\n")) == 3

    def test_malformed_file_lists_all_failures(self, capsys, tmp_path):
        bad1 = tmp_path / "bad1.json"
        bad1.write_text('{"name":"x","colors":[[0,0,300]]}')
        bad2 = tmp_path / "bad2.json"
        bad2.write_text("not json")
        code, _, err = run_cli(capsys, "eval", str(bad1), str(bad2))
        assert code == 2
        assert "bad1.json" in err and "bad2.json" in err


class TestCompare:
    def test_sized_with_supplied_da(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "13c", "HCCB8", "--da", "0.002")
        assert code == 0 and "ce=0.231" in out

    def test_computed_path(self, capsys, bw2_file):
        code, out, _ = run_cli(capsys, "compare", "corners8", bw2_file)
        assert code == 0
        assert "ce=0.800" in out and "da_source=computed" in out

    def test_negative_ce_still_exits_0(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "HCCB4", "3c", "--da", "1.0")
        assert code == 0 and "ce=-0.268" in out

    def test_equal_sizes_exit_2(self, capsys):
        assert run_cli(capsys, "compare", "bw2", "bw2")[0] == 2

    def test_sized_only_without_da_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "compare", "13c", "HCCB8")
        assert code == 2 and "sized-only" in err

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "9d", "HCCB8", "--da", "0", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[1].startswith("9d,HCCB8,9,8,0.057,0.000,0.057,")


class TestTable1:
    def test_shape_and_first_row(self, capsys):
        code, out, _ = run_cli(capsys, "table1")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 25
        assert lines[1].startswith("HCCB4,3c,5,3,0.465,1.000,-0.268,")

    def test_byte_stable(self, capsys):
        _, first, _ = run_cli(capsys, "table1")
        _, second, _ = run_cli(capsys, "table1")
        assert first == second

    def test_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--format", "json-lines")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert len(rows) == 24 and rows[0]["p2"] == "HCCB4"


class TestSimulate:
    def test_zero_sigma_row(self, capsys):
        code, out, _ = run_cli(capsys, "simulate", "bw2", "--sigma", "0", "--trials", "1000")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "palette,sigma,trials,errors,ser,hw95"
        assert lines[1] == "bw2,0.0,1000,0,0.0,0.0"

    def test_sweep_rows_and_determinism(self, capsys):
        args = ("simulate", "corners8", "--sigma", "0,30,60", "--trials", "5000", "--seed", "7")
        code, out1, _ = run_cli(capsys, *args)
        assert code == 0 and len(out1.strip().split("\n")) == 4
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_sized_only_exit_2(self, capsys):
        assert run_cli(capsys, "simulate", "HCCB8", "--sigma", "1")[0] == 2

    def test_bad_sigma_list(self, capsys):
        assert run_cli(capsys, "simulate", "bw2", "--sigma", "a,b")[0] == 2


class TestCliContract:
    def test_unknown_flag_rejected(self, capsys):
        assert run_cli(capsys, "entropy", "4", "--bogus")[0] == 2

    def test_unknown_command_rejected(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_unknown_palette_argument(self, capsys):
        code, _, err = run_cli(capsys, "eval", "no-such-palette")
        assert code == 2 and "no-such-palette" in err

    def test_env_seed_matches_flag(self, capsys, monkeypatch):
        monkeypatch.setenv("CHROMACAP_SEED", "99")
        _, via_env, _ = run_cli(capsys, "simulate", "bw2", "--sigma", "40", "--trials", "2000")
        monkeypatch.delenv("CHROMACAP_SEED")
        _, via_flag, _ = run_cli(
            capsys, "simulate", "bw2", "--sigma", "40", "--trials", "2000", "--seed", "99"
        )
        assert via_env == via_flag

    def test_flag_beats_env_seed(self, capsys, monkeypatch):
        _, baseline, _ = run_cli(
            capsys, "simulate", "corners8", "--sigma", "60", "--trials", "2000", "--seed", "1"
        )
        monkeypatch.setenv("CHROMACAP_SEED", "2")
        _, with_env, _ = run_cli(
            capsys, "simulate", "corners8", "--sigma", "60", "--trials", "2000", "--seed", "1"
        )
        assert baseline == with_env

    def test_bad_env_seed_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("CHROMACAP_SEED", "not-a-number")
        assert run_cli(capsys, "simulate", "bw2", "--sigma", "0", "--trials", "10")[0] == 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "chromacap", "entropy", "4"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "h=8.0"
