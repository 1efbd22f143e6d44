import io
import json

import pytest

from monodromy.cli import RunConfig, UsageError, main
from monodromy.formats import dump_fibration
from monodromy.lefschetz import LefschetzFibration, twist_about
from monodromy.mcg import MCGWord, hyperelliptic_relator


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


S3_A = {"context": "symmetric:3", "factors": ["(1 2)", "(1 2)"]}
S3_B = {"context": "symmetric:3", "factors": ["(1 3)", "(1 3)"]}
CONIC = {"degree": 2, "factors": ["s1", "s1"], "projective": True}
DISK = {"genus": 2, "base": "disk", "phi": "x1", "factors": [{"conjugator": "e", "orientation": 1}, {"conjugator": "x2 x1", "orientation": 1}]}


def test_verify_ok_and_mismatch(tmp_path):
    good = write(tmp_path, "a.json", {"context": "braid:3", "factors": ["s1", "s2"], "expected_product": "s1 s2"})
    code, text = run("verify", good)
    assert code == 0 and json.loads(text)["ok"]
    bad = write(tmp_path, "b.json", {"context": "braid:3", "factors": ["s1", "s2"], "expected_product": "s2 s1"})
    code, text = run("verify", bad)
    assert code == 1 and json.loads(text)["checks"]["expected_product"] is False


def test_verify_bad_token(tmp_path, capsys):
    f = write(tmp_path, "c.json", {"context": "braid:3", "factors": ["s1 s0"]})
    code, _ = run("verify", f)
    err = capsys.readouterr().err
    assert code == 3 and "s0" in err and "column" in err


def test_verify_invalid_json(tmp_path, capsys):
    p = tmp_path / "d.json"
    p.write_text('{"context": \n  nope}')
    assert run("verify", str(p))[0] == 3
    assert "line 2" in capsys.readouterr().err


def test_equiv_s3_verdicts(tmp_path):
    a, b = write(tmp_path, "a.json", S3_A), write(tmp_path, "b.json", S3_B)
    code, text = run("equiv", a, b)
    assert code == 1 and json.loads(text)["status"] == "inequivalent"
    cert = tmp_path / "cert.json"
    code, text = run("equiv", a, b, "--conjugation", "--certificate", str(cert))
    assert code == 0 and json.loads(text)["status"] == "equivalent"
    code, text = run("verify", "--replay", str(cert))
    assert code == 0 and json.loads(text)["checks"]["replay"]


def test_equiv_context_mismatch(tmp_path):
    a = write(tmp_path, "a.json", S3_A)
    b = write(tmp_path, "b.json", {"context": "symmetric:4", "factors": ["(1 2)", "(1 2)"]})
    assert run("equiv", a, b)[0] == 3


def test_equiv_budget_one_unknown(tmp_path):
    a = write(tmp_path, "a.json", {"context": "braid:3", "factors": ["s1", "s2", "s1", "s2"]})
    b = write(tmp_path, "b.json", {"context": "braid:3", "factors": ["s2", "s2^-1 s1 s2", "s2", "s2^-1 s1 s2"]})
    code, text = run("equiv", a, b, "--budget", "1")
    assert code == 2
    data = json.loads(text)
    assert data["status"] == "unknown" and data["explored"] == 1
    assert run("equiv", a, b, "--budget", "0")[0] == 3


def test_budget_from_environment(tmp_path, monkeypatch):
    a = write(tmp_path, "a.json", {"context": "braid:3", "factors": ["s1", "s2", "s1", "s2"]})
    b = write(tmp_path, "b.json", {"context": "braid:3", "factors": ["s2", "s2^-1 s1 s2", "s2", "s2^-1 s1 s2"]})
    monkeypatch.setenv("MONODROMY_BUDGET", "1")
    assert run("equiv", a, b)[0] == 2
    monkeypatch.setenv("MONODROMY_BUDGET", "lots")
    assert run("equiv", a, b)[0] == 3


def test_equiv_kas_identical(tmp_path):
    a = write(tmp_path, "f.json", DISK)
    code, text = run("equiv", "--kas", a, a)
    assert code == 0 and json.loads(text)["mode"] == "kas"


def test_orbit(tmp_path):
    f = write(tmp_path, "o.json", {"context": "symmetric:3", "factors": ["(1 2)", "(2 3)"]})
    code, text = run("orbit", f)
    data = json.loads(text)
    assert code == 0 and data["size"] == 3 and data["exhausted"]


def test_vankampen_conic(tmp_path):
    f = write(tmp_path, "conic.json", CONIC)
    code, text = run("vankampen", f, "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["fingerprint"]["abelianization"] == [2]
    assert data["fingerprint"]["hom_counts"]["3"] == 4
    assert run("vankampen", f)[1] == run("vankampen", f)[1]
    code, text = run("vankampen", f, "--simplify", "50")
    assert text.startswith("gens: 1\n")


def test_vankampen_empty_affine(tmp_path):
    f = write(tmp_path, "free.json", {"degree": 3, "factors": []})
    code, text = run("vankampen", f, "--format", "json")
    assert json.loads(text)["fingerprint"]["abelianization"] == [0, 0, 0]


def test_vankampen_errors(tmp_path):
    f = write(tmp_path, "bad.json", {"degree": 3, "factors": ["s3"]})
    assert run("vankampen", f)[0] == 3
    good = write(tmp_path, "conic.json", CONIC)
    assert run("vankampen", good, "--homs", "9")[0] == 3


def valid_disk():
    fs = tuple(twist_about(2, i) for i, _ in hyperelliptic_relator(2).letters)
    return dump_fibration(LefschetzFibration(2, "disk", fs, MCGWord.involution(2)))


def test_fibersum(tmp_path):
    a = write(tmp_path, "a.json", DISK)
    code, text = run("fibersum", a, a)
    assert code == 0 and len(json.loads(text)["factors"]) == 4
    v = write(tmp_path, "v.json", valid_disk())
    assert run("verify", v)[0] == 0
    out = tmp_path / "sum.json"
    assert run("fibersum", v, v, "--psi", "x2 x4^-1", "-o", str(out))[0] == 0
    assert run("verify", str(out))[0] == 0
    assert run("verify", a)[0] == 1
    code, _ = run("fibersum", a, a, "--psi", "x3 H")
    assert code == 0
    other = write(tmp_path, "g3.json", {**DISK, "genus": 3})
    assert run("fibersum", a, other)[0] != 0


def test_coxeter_and_relators():
    code, text = run("coxeter", "--genus", "2", "--chain", "1,2")
    data = json.loads(text)
    assert code == 0 and data["word"] == "x1 x2 x1" and data["length"] == 3
    assert run("coxeter", "--genus", "2", "--chain", "")[0] == 3
    code, text = run("relators", "--genus", "2")
    assert code == 0 and json.loads(text)["ok"]
    assert run("relators", "--genus", "5")[0] == 3


def test_unknown_flag_rejected():
    assert run("orbit", "x.json", "--bogus")[0] == 3


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("orbit", [], budget=0)
    with pytest.raises(UsageError):
        RunConfig("orbit", [], threads=0)
