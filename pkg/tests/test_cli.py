import json
import subprocess
import sys

import pytest

from weightsmith.cli import main, read_config, resolve


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_relations_q2(capsys):
    code, rep = run(capsys, "relations", "--q", "2")
    assert code == 0
    assert rep["schema"] == 1 and rep["command"] == "relations"
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_relations_q5_exhaustive(capsys):
    code, rep = run(capsys, "relations", "--q", "5", "--exhaustive")
    assert code == 0 and rep["params"]["exhaustive"] is True


def test_relations_sampled(capsys):
    code, rep = run(capsys, "relations", "--q", "7", "--samples", "200", "--seed", "4")
    assert code == 0 and rep["params"]["samples"] == 200


def test_torus_atlas(capsys):
    code, rep = run(capsys, "torus-atlas", "--group", "g2", "--q", "5")
    assert code == 0
    assert [t["order"] for t in rep["data"]["tori"]] == [16, 36, 24, 24, 31, 21]
    code, rep = run(capsys, "torus-atlas", "--group", "3d4", "--q", "2")
    assert sorted(t["order"] for t in rep["data"]["tori"]) == [7, 9, 9, 13, 21, 27, 49]


def test_radical_audit(capsys):
    code, rep = run(capsys, "radical-audit")
    assert code == 0
    statuses = {c["check"]: c["status"] for c in rep["checks"]}
    assert statuses["quotient_class_sizes"] == "pass"
    assert statuses["normalizer_in_G_inside_C"] == "assumed"


def test_stab_census(capsys):
    code, rep = run(capsys, "stab-census", "--group", "g2", "--q", "7")
    assert code == 0
    weights = [r["weight_count"] for r in rep["data"]["eps+1"] if r["weight_count"] is not None]
    assert 4 in weights
    code, rep = run(capsys, "stab-census", "--group", "3d4", "--q", "2")
    assert code == 0
    assert rep["data"]["eps-1"]["kernel_criterion"] == "pass"


def test_awc_check(capsys):
    code, rep = run(capsys, "awc-check", "--fixture", "S4", "--ell", "2")
    assert code == 0
    assert rep["checks"][0]["observed"] == rep["checks"][0]["expected"] == 2
    code, rep = run(capsys, "awc-check", "--fixture", "SL2(3)", "--ell", "2")
    assert rep["checks"][0]["observed"] == 3


def test_awc_fixture_file_is_hashed(capsys, tmp_path):
    p = tmp_path / "s3.json"
    p.write_text(json.dumps({"kind": "perm", "generators": [[1, 2, 0], [1, 0, 2]], "name": "S3"}))
    code, rep = run(capsys, "awc-check", "--fixture", str(p))
    assert code == 0
    assert str(p) in rep["data"]["fixture_sha256"]


def test_budget_exhaustion_exits_2(capsys):
    code, rep = run(capsys, "radical-audit", "--budget", "100")
    assert code == 2
    assert rep["checks"][0]["status"] == "skipped"


def test_invalid_q_exits_1(capsys):
    assert main(["relations", "--q", "6"]) == 1
    assert "not a prime power" in capsys.readouterr().err


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["stab-census", "--group", "3d4", "--q", "4", "--out", str(a)]) == 0
    assert main(["stab-census", "--group", "3d4", "--q", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "audit.cfg"
    cfg.write_text("# audit settings\nsamples = 50\nseed = 9\nbudget = 777\n")
    assert read_config(cfg) == {"samples": 50, "seed": 9, "budget": 777}
    cmd, resolved = resolve(["relations", "--q", "7", "--config", str(cfg), "--seed", "1"])
    assert cmd == "relations"
    assert resolved["samples"] == 50 and resolved["seed"] == 1 and resolved["budget"] == 777


def test_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    with pytest.raises(ValueError):
        read_config(cfg)


def test_console_script_module_entry():
    out = subprocess.run([sys.executable, "-m", "weightsmith.cli", "signs"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["summary"]["fail"] == 0
