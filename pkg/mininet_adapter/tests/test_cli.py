import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from mininet_adapter.cli import main

from fakes import FakeNet, install_fake_mininet

FIXTURES = Path(__file__).parent / "fixtures"
SPARSE = str(FIXTURES / "sparse_n6.json")


def test_deploy_without_verify(monkeypatch, capsys):
    created = install_fake_mininet(monkeypatch)
    assert main(["deploy", SPARSE]) == 0
    out = capsys.readouterr().out
    assert "deployed sparse n=6 E=6 links=12" in out
    assert created[0].stopped  # torn down on exit


def test_deploy_with_verify_and_report(monkeypatch, tmp_path, capsys):
    install_fake_mininet(monkeypatch)
    report_path = tmp_path / "report.json"
    code = main(["deploy", SPARSE, "--verify", "--report", str(report_path)])
    assert code == 0
    assert "verdict=pass" in capsys.readouterr().out
    doc = json.loads(report_path.read_text())
    assert doc["ping_success_ratio"] == 1.0


def test_failed_verification_exits_nonzero(monkeypatch, capsys):
    install_fake_mininet(
        monkeypatch, factory=lambda **kw: FakeNet(ping_loss=50.0, **kw)
    )
    assert main(["deploy", SPARSE, "--verify"]) == 1
    assert "verdict=fail" in capsys.readouterr().out


def test_invalid_scenario_is_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    doc = json.loads(Path(SPARSE).read_text())
    doc["flows"][0]["dst"] = doc["flows"][0]["src"]
    bad.write_text(json.dumps(doc))
    assert main(["deploy", str(bad)]) == 1
    err = capsys.readouterr().err
    assert err.count("\n") == 1


def test_missing_file_is_io_error(capsys):
    assert main(["deploy", "/nope/missing.json"]) == 3


def test_environment_error_without_emulator(capsys):
    try:
        import mininet  # noqa: F401
    except ImportError:
        assert main(["deploy", SPARSE]) == 4
        assert "mininet" in capsys.readouterr().err
    else:
        pytest.skip("mininet present; environment error cannot be simulated")


def test_usage_error_on_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["explode"])
    assert exc.value.code == 2


def test_console_entry_point_exists():
    exe = shutil.which("mn-scenario")
    if exe is None:
        pytest.skip("console script not installed")
    result = subprocess.run(
        [exe, "deploy", "/nope/missing.json"], capture_output=True, text=True
    )
    assert result.returncode == 3


def test_module_invocation(capsys):
    result = subprocess.run(
        [sys.executable, "-m", "mininet_adapter.cli", "deploy", "/nope/missing.json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 3
