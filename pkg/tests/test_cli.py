import json

from astute.cli import main
from astute.graph import factor_from_doc, validate_factor


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor_text(capsys):
    code, out, _ = run(capsys, "factor", "--rule", "pcr", "--b", "2", "--n", "3",
                       "--k", "2", "--format", "text")
    assert code == 0
    assert "4 cycles" in out
    assert "000@0 -> 000@1" in out


def test_factor_json_roundtrip(capsys):
    code, out, _ = run(capsys, "factor", "--rule", "pcr", "--b", "2", "--n", "3",
                       "--k", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "astute/1"
    assert doc["count"] == 4 and doc["rule"] == "pcr"
    assert validate_factor(factor_from_doc(doc)).ok


def test_factor_custom_affine(capsys):
    code, out, _ = run(capsys, "factor", "--rule", "affine:1;1,0,1", "--b", "2",
                       "--n", "2", "--format", "text")
    assert code == 0
    assert "1 cycles" in out


def test_factor_deterministic(capsys):
    args = ("factor", "--rule", "icr", "--b", "3", "--n", "2", "--k", "2",
            "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_xor_requires_binary(capsys):
    code, _, err = run(capsys, "factor", "--rule", "xor", "--b", "3", "--n", "3")
    assert code == 2
    assert "xor requires b=2" in err


def test_degenerate_sizes_rejected(capsys):
    code, _, err = run(capsys, "count", "--rule", "pcr", "--b", "2", "--n", "0")
    assert code == 2 and "n must be >= 1" in err
    code, _, err = run(capsys, "count", "--rule", "pcr", "--b", "2", "--n", "3",
                       "--k", "0")
    assert code == 2


def test_factor_budget_exit(capsys):
    code, _, err = run(capsys, "factor", "--rule", "pcr", "--b", "2", "--n", "23")
    assert code == 3
    assert "budget" in err


def test_count_all_agrees(capsys):
    code, out, _ = run(capsys, "count", "--rule", "pcr", "--b", "2", "--n", "3",
                       "--k", "2", "--method", "all")
    assert code == 0
    lines = [l for l in out.strip().splitlines()]
    assert len(lines) == 4
    assert all(l.split()[1] == "4" for l in lines)


def test_count_single_methods(capsys):
    code, out, _ = run(capsys, "count", "--rule", "icr", "--b", "2", "--n", "2",
                       "--method", "burnside")
    assert code == 0 and out.split()[1] == "1"
    code, out, _ = run(capsys, "count", "--rule", "xor", "--b", "2", "--n", "3",
                       "--method", "closed")
    assert code == 0 and out.split()[1] == "4"


def test_count_closed_unavailable_for_custom(capsys):
    code, _, err = run(capsys, "count", "--rule", "affine:0;1,1,1", "--b", "2",
                       "--n", "2", "--method", "closed")
    assert code == 2
    assert "closed form" in err


def test_extremal_json(capsys, tmp_path):
    dot = tmp_path / "cert.dot"
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "extremal", "--b", "2", "--n", "3", "--k", "2",
                       "--emit-dot", str(dot), "--emit-json", str(cert))
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "astute/1"
    assert doc["count"] == 6 and doc["optimal"] is True
    assert {"b", "n", "k", "count", "cycles", "optimal"} <= doc.keys()
    assert json.loads(cert.read_text()) == doc
    assert "color=blue" in dot.read_text()
    assert validate_factor(factor_from_doc(doc)).ok


def test_extremal_budget_exit(capsys):
    code, _, err = run(capsys, "extremal", "--b", "2", "--n", "6")
    assert code == 3
    assert "exceeds search budget" in err


def test_extremal_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("ASTUTE_MAX_NODES", "25")
    code, out, _ = run(capsys, "extremal", "--b", "2", "--n", "4", "--k", "2")
    assert code == 3
    assert json.loads(out)["optimal"] is False


def test_verify_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counterexample")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["checks"][0]["detail"] == "rotation-rule=4 extremal=6"


def test_verify_theorem1_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--b", "2",
                       "--n", "3", "--k", "3")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["checks"]) == 1
    assert doc["checks"][0]["name"] == "pcr-extremal b=2 n=3 k=3"


def test_verify_csv(capsys, tmp_path):
    path = tmp_path / "orbits.csv"
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--b", "2",
                       "--n", "3", "--k", "1", "--csv", str(path))
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "orbit,word,phase,re,im,distinguished"
    assert len(lines) == 9  # 8 vertices + header
    # with --csv the flags describe the dump, not a sweep restriction
    assert len(json.loads(out)["checks"]) == len(
        json.loads(run(capsys, "verify", "--suite", "theorem1")[1])["checks"])


def test_verify_csv_needs_instance(capsys):
    code, _, err = run(capsys, "verify", "--suite", "theorem1", "--csv", "/tmp/x.csv")
    assert code == 2
    assert "--csv" in err


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--b", "2", "--n", "2", "--rule", "pcr")
    assert code == 0
    assert out.startswith("digraph astute {")
    assert "[color=magenta]" in out
    code, out2, _ = run(capsys, "export", "--b", "2", "--n", "2")
    assert code == 0
    assert "color=" not in out2


def test_usage_error_exit_code(capsys):
    import pytest
    with pytest.raises(SystemExit) as exc:
        main(["factor", "--rule", "pcr"])  # missing required flags
    assert exc.value.code == 2
