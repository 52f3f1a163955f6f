import subprocess
import sys
from pathlib import Path

import pytest

from sdnscen.cli import main

GOLDEN = Path(__file__).parent / "golden"

GEN_FLAGS = [
    "generate",
    "--class",
    "sparse",
    "--nodes",
    "6",
    "--seed",
    "7",
    "--flows",
    "2",
]


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_full_mesh_writes_expected_edge_count(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, stdout, _ = run(
        ["generate", "--class", "full-mesh", "--nodes", "5", "--seed", "1",
         "--flows", "10", "--output", str(out)],
        capsys,
    )
    assert code == 0
    assert "E=10" in stdout
    assert out.read_text().count('"u"') == 10  # one record per edge


def test_generate_undersized_is_domain_error(tmp_path, capsys):
    code, _, err = run(
        ["generate", "--class", "sparse", "--nodes", "2", "--seed", "1",
         "--output", str(tmp_path / "s.json")],
        capsys,
    )
    assert code == 1
    assert err.count("\n") == 1
    assert "at least 3 nodes" in err


def test_generate_twice_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(GEN_FLAGS + ["--output", str(a)], capsys)
    run(GEN_FLAGS + ["--output", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_generate_matches_golden(tmp_path, capsys):
    out = tmp_path / "s.json"
    run(GEN_FLAGS + ["--output", str(out)], capsys)
    assert out.read_bytes() == (GOLDEN / "sparse_n6_seed7.json").read_bytes()


def test_bad_flag_value_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--class", "mesh-of-wonders", "--nodes", "5",
              "--seed", "1", "--output", str(tmp_path / "s.json")])
    assert exc.value.code == 2


def test_seed_out_of_range_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--class", "sparse", "--nodes", "5",
              "--seed", str(2**64), "--output", str(tmp_path / "s.json")])
    assert exc.value.code == 2


def test_non_utc_created_rejected(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(GEN_FLAGS + ["--created", "2024-01-01T10:00:00+02:00",
                          "--output", str(tmp_path / "s.json")])
    assert exc.value.code == 2


def test_analyze_k4_reports_constant_five(tmp_path, capsys):
    scenario = tmp_path / "k4.json"
    run(["generate", "--class", "full-mesh", "--nodes", "4", "--seed", "3",
         "--output", str(scenario)], capsys)
    code, stdout, _ = run(["analyze", str(scenario)], capsys)
    assert code == 0
    assert "min=5 max=5 mean=5.0" in stdout


def test_analyze_guard_suggests_cap(tmp_path, capsys):
    scenario = tmp_path / "big.json"
    run(["generate", "--class", "sparse", "--nodes", "20", "--seed", "3",
         "--output", str(scenario)], capsys)
    code, _, err = run(["analyze", str(scenario)], capsys)
    assert code == 1
    assert "--max-length" in err
    code, stdout, _ = run(["analyze", str(scenario), "--max-length", "4"], capsys)
    assert code == 0
    assert "capped=" in stdout


def test_analyze_matrix_prints_rows(tmp_path, capsys):
    scenario = tmp_path / "k3.json"
    run(["generate", "--class", "full-mesh", "--nodes", "3", "--seed", "3",
         "--output", str(scenario)], capsys)
    code, stdout, _ = run(["analyze", str(scenario), "--matrix"], capsys)
    assert code == 0
    assert "0 2 2" in stdout


def test_export_flat_matches_golden(tmp_path, capsys):
    out = tmp_path / "d.txt"
    code, _, _ = run(
        ["export", str(GOLDEN / "sparse_n6_seed7.json"), "--format", "flat",
         "--output", str(out)],
        capsys,
    )
    assert code == 0
    assert out.read_bytes() == (GOLDEN / "sparse_n6_seed7.flat.txt").read_bytes()


def test_export_emulator_matches_golden(tmp_path, capsys):
    out = tmp_path / "d.py"
    run(["export", str(GOLDEN / "sparse_n6_seed7.json"), "--format", "emulator",
         "--output", str(out)], capsys)
    assert out.read_bytes() == (GOLDEN / "sparse_n6_seed7.mininet.py").read_bytes()


def test_export_flat_k3_has_four_lines(tmp_path, capsys):
    scenario = tmp_path / "k3.json"
    out = tmp_path / "d.txt"
    run(["generate", "--class", "full-mesh", "--nodes", "3", "--seed", "9",
         "--flows", "1", "--output", str(scenario)], capsys)
    run(["export", str(scenario), "--format", "flat", "--output", str(out)], capsys)
    assert len(out.read_text().splitlines()) == 4


def test_export_unknown_format_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["export", "whatever.json", "--format", "yaml", "--output", "x"])
    assert exc.value.code == 2


def test_export_oversized_emulator_is_domain_error(tmp_path, capsys):
    scenario = tmp_path / "big.json"
    run(["generate", "--class", "sparse", "--nodes", "70", "--seed", "2",
         "--output", str(scenario)], capsys)
    code, _, err = run(
        ["export", str(scenario), "--format", "emulator",
         "--output", str(tmp_path / "d.py")],
        capsys,
    )
    assert code == 1
    assert "capped at 64" in err


def test_missing_scenario_file_is_io_error(capsys):
    code, _, err = run(["analyze", "/nope/missing.json"], capsys)
    assert code == 3
    assert err.count("\n") == 1


def test_validate_accepts_golden(capsys):
    code, stdout, _ = run(["validate", str(GOLDEN / "sparse_n6_seed7.json")], capsys)
    assert code == 0
    assert "valid scenario" in stdout


def test_validate_rejects_corrupted(tmp_path, capsys):
    doc = (GOLDEN / "sparse_n6_seed7.json").read_text().replace('"seed": 7', '"seed": -1')
    bad = tmp_path / "bad.json"
    bad.write_text(doc)
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 1
    assert "seed" in err


def test_console_entry_point_via_interpreter(tmp_path):
    out = tmp_path / "s.json"
    result = subprocess.run(
        [sys.executable, "-m", "sdnscen"] + GEN_FLAGS + ["--output", str(out)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert out.read_bytes() == (GOLDEN / "sparse_n6_seed7.json").read_bytes()
