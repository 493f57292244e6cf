import json
import shutil
import subprocess

import pytest

from rotkit.cli import main
from rotkit.ktables import export_tables
from rotkit.verify import SIMPLE_CASES, VerificationReport, all_labels, lattice_oracle_claims, run_case


def run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_amalgamated_json(capsys):
    code, data = run_json(capsys, "--case", "amalg:4,4;2")
    assert code == 0 and data["pass"] is True
    by_id = {c["id"]: c["witness"] for c in data["claims"]}
    assert by_id["k0_rank@low"]["k0_rank"] == 13
    assert by_id["k1_rank@high"]["k1_rank"] == 1


def test_free_text(capsys):
    assert main(["--case", "free:2,2", "--theta-window", "low"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("case free:2,2: PASS")
    assert "'k0_rank': 12" in out and "'k1_rank': 0" in out


def test_identities_json(capsys):
    code, data = run_json(capsys, "--case", "identities", "--theta-window", "low")
    assert code == 0
    assert all(c["status"] == "pass" for c in data["claims"])
    assert any(c["witness"].get("monomials") == 1681 for c in data["claims"])


def test_json_schema_round_trip(capsys):
    _, data = run_json(capsys, "--case", "thm1.3")
    assert set(data) == {"case", "claims", "pass", "millis"}
    assert all(set(c) == {"id", "paper_ref", "status", "witness"} for c in data["claims"])
    report = VerificationReport.from_json(data)
    assert report.to_json() == data


def test_round_trip_rejects_inconsistent_pass_flag():
    data = run_case("free:2,3", "low").to_json()
    data["pass"] = not data["pass"]
    with pytest.raises(ValueError):
        VerificationReport.from_json(data)


def test_unknown_case(capsys):
    assert main(["--case", "free:5,7"]) == 2
    assert main(["--case", "amalg:4,4;3"]) == 2
    assert main(["--case", "nonsense"]) == 2
    assert "unknown case" in capsys.readouterr().err


def test_list(capsys):
    assert main(["--list"]) == 0
    labels = capsys.readouterr().out.split()
    assert labels == all_labels() + ["all"]
    assert set(SIMPLE_CASES) <= set(labels)


def test_tables_override_matching(tmp_path, capsys):
    export_tables(tmp_path)
    code, data = run_json(capsys, "--case", "amalg:6,6;3", "--tables", str(tmp_path))
    assert code == 0
    assert data["claims"][0]["id"] == "tables/cross-check"


def test_tables_override_with_error_fails_claims(tmp_path, capsys):
    export_tables(tmp_path)
    p = tmp_path / "mu.json"
    data = json.loads(p.read_text())
    data["vectors"][8][0][0] = "1/4"
    p.write_text(json.dumps(data))
    code, report = run_json(capsys, "--case", "thm1.3", "--tables", str(tmp_path))
    assert code == 1
    assert report["pass"] is False
    failed = {c["id"] for c in report["claims"] if c["status"] == "fail"}
    assert "tables/cross-check" in failed


def test_tables_override_missing_dir(tmp_path, capsys):
    assert main(["--case", "thm1.3", "--tables", str(tmp_path / "absent")]) == 2


def test_exit_code_tracks_claims(tmp_path, capsys):
    export_tables(tmp_path)
    p = tmp_path / "xi.json"
    data = json.loads(p.read_text())
    data["by_window"]["high"][5][1][0] = "3"
    p.write_text(json.dumps(data))
    code, report = run_json(capsys, "--case", "free:2,2", "--tables", str(tmp_path))
    assert code == (0 if report["pass"] else 1)
    assert code == 1


def test_lattice_oracle_seed_is_reproducible():
    a = [c.to_json() for c in lattice_oracle_claims(seed=7, count=40)]
    b = [c.to_json() for c in lattice_oracle_claims(seed=7, count=40)]
    assert a == b
    assert all(c["status"] == "pass" for c in a)


def test_export_tables(tmp_path, capsys):
    assert main(["--export-tables", str(tmp_path)]) == 0
    assert (tmp_path / "lambda.json").exists()


def test_all_keeps_label_order():
    report = run_case("all")
    assert report.passed
    seen = []
    for c in report.claims:
        label = c.id.split("/", 1)[0]
        if not seen or seen[-1] != label:
            seen.append(label)
    assert seen == all_labels()


@pytest.mark.skipif(shutil.which("rotkit") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["rotkit", "--case", "free:3,6", "--theta-window", "high"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "k0_rank': 18" in proc.stdout
