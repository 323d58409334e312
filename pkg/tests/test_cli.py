import json

import pytest

from signotopes import SignFunction, loads, read_file, write_file
from signotopes.cli import dispatch

EXAMPLE_134 = SignFunction.from_string(3, 4, "-+-+")


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    manifest = json.loads(captured.out) if captured.out.strip() else None
    return code, manifest, captured.err


class TestVerify:
    def test_monotone_file(self, tmp_path, capsys):
        f = tmp_path / "ok.mono"
        write_file(SignFunction.constant(3, 4), f)
        code, manifest, _ = run(capsys, "verify", "--in", str(f))
        assert code == 0
        assert manifest["result"]["monotone"] is True
        assert manifest["subcommand"] == "verify"
        assert manifest["tool_version"]

    def test_non_monotone_exits_one_with_witness(self, tmp_path, capsys):
        f = tmp_path / "bad.mono"
        write_file(EXAMPLE_134, f)
        code, manifest, err = run(capsys, "verify", "--in", str(f))
        assert code == 1
        assert manifest["result"]["monotone"] is False
        assert manifest["result"]["witness"] == [1, 2, 3, 4]
        assert manifest["result"]["transitive"] is True

    def test_malformed_file_exits_two(self, tmp_path, capsys):
        f = tmp_path / "broken.mono"
        f.write_text("MONO 1\nr=3 n=4\n-+x-\n")
        code, manifest, err = run(capsys, "verify", "--in", str(f))
        assert code == 2
        assert "usage error" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, _ = run(capsys, "verify", "--in", "/nonexistent.mono")
        assert code == 2


class TestPath:
    def test_manifest(self, tmp_path, capsys):
        f = tmp_path / "c.mono"
        write_file(SignFunction.constant(3, 5), f)
        code, manifest, _ = run(capsys, "path", "--in", str(f))
        assert code == 0
        paths = manifest["result"]["paths"]
        assert paths[0] == {"color": "-", "length": 5, "witness": [1, 2, 3, 4, 5]}

    def test_jsonl(self, tmp_path, capsys):
        f = tmp_path / "c.mono"
        write_file(SignFunction.constant(3, 5), f)
        code = dispatch(["path", "--in", str(f), "--jsonl"])
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert len(out) == 2
        assert json.loads(out[0])["color"] == "-"


class TestTower:
    def test_build_verify_emit(self, tmp_path, capsys):
        f = tmp_path / "tower.mono"
        code, manifest, _ = run(
            capsys, "tower", "--r", "3", "--n", "3", "--verify", "--emit", str(f)
        )
        assert code == 0
        result = manifest["result"]
        assert result["vertices"] == 8
        assert result["monotone"] is True
        assert max(result["longest_paths"]) <= result["path_bound"] == 7
        emitted = read_file(f)
        assert emitted.n == 8 and emitted.r == 3

    def test_cap_exits_three(self, capsys):
        code, _, err = run(
            capsys, "--max-elements", "5", "tower", "--r", "3", "--n", "3"
        )
        assert code == 3
        assert "resource cap" in err


class TestComp:
    def test_verify_all(self, tmp_path, capsys):
        f = tmp_path / "blocks.mono"
        code, manifest, _ = run(
            capsys, "comp", "--r", "3", "--h", "2", "--verify", "all",
            "--emit", str(f),
        )
        assert code == 0
        result = manifest["result"]
        assert result["zeros"] == 6
        assert result["transversal_zeros"] == 3
        assert result["completions_checked"] == 64
        assert result["completions_non_monotone"] == 0
        assert loads(f.read_text()).color((1, 5, 7)) == 0

    def test_verify_sample_records_seed(self, capsys):
        code, manifest, _ = run(
            capsys, "comp", "--r", "4", "--h", "2", "--verify", "sample:50:9",
        )
        assert code == 0
        assert manifest["seed"] == 9
        assert manifest["result"]["completions_checked"] == 50

    def test_bad_mode_exits_two(self, capsys):
        code, _, _ = run(capsys, "comp", "--r", "3", "--h", "2", "--verify", "meh")
        assert code == 2


class TestCount:
    def test_count_manifest(self, capsys):
        code, manifest, _ = run(capsys, "count", "--r", "3", "--n", "4")
        assert code == 0
        assert manifest["result"]["count"] == 8
        assert manifest["result"]["bounds_ok"] is True

    def test_cap_exits_three(self, capsys):
        code, _, _ = run(capsys, "count", "--r", "2", "--n", "30")
        assert code == 3


class TestRamsey:
    def test_resolved_with_witness_file(self, tmp_path, capsys):
        f = tmp_path / "witness.mono"
        code, manifest, _ = run(
            capsys, "ramsey", "--r", "2", "--path", "3", "--max", "6",
            "--witness", str(f),
        )
        assert code == 0
        assert manifest["result"]["number"] == 5
        witness = read_file(f)
        assert witness.n == 4

    def test_unresolved_reports_bound(self, capsys):
        code, manifest, _ = run(capsys, "ramsey", "--r", "2", "--path", "4", "--max", "5")
        assert code == 0
        assert manifest["result"]["number"] is None
        assert manifest["result"]["lower_bound"] == 6


class TestProjectAndWiring:
    def test_project(self, tmp_path, capsys):
        src = tmp_path / "in.mono"
        dst = tmp_path / "out.mono"
        write_file(EXAMPLE_134, src)
        code, manifest, _ = run(
            capsys, "project", "--in", str(src), "--i", "4", "--out", str(dst)
        )
        assert code == 0
        assert read_file(dst).color_string() == "+-+"

    def test_wiring_outputs(self, tmp_path, capsys):
        src = tmp_path / "in.mono"
        svg = tmp_path / "out.svg"
        sweep = tmp_path / "out.txt"
        write_file(SignFunction.constant(3, 4), src)
        code, manifest, _ = run(
            capsys, "wiring", "--in", str(src), "--svg", str(svg),
            "--sweep", str(sweep),
        )
        assert code == 0
        assert manifest["result"]["crossings"] == 6
        assert svg.read_text().startswith("<?xml")
        assert len(sweep.read_text().splitlines()) == 6

    def test_wiring_rejects_non_monotone(self, tmp_path, capsys):
        src = tmp_path / "in.mono"
        write_file(EXAMPLE_134, src)
        code, _, err = run(capsys, "wiring", "--in", str(src))
        assert code == 1
        assert "verification failure" in err


class TestSelftest:
    def test_single_fast_criterion(self, capsys):
        code, manifest, err = run(capsys, "selftest", "--only", "1")
        assert code == 0
        assert manifest["result"]["all_passed"] is True
        assert "PASS criterion 1" in err


class TestUsage:
    def test_no_command_exits_two(self, capsys):
        assert dispatch([]) == 2

    def test_unknown_command_exits_two(self, capsys):
        assert dispatch(["frobnicate"]) == 2
