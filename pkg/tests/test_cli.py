import json
import subprocess
import sys

import pytest

from udrings.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_arrow_json(capsys):
    code, out, _ = call(capsys, "--m", "3", "--N", "2", "--format", "json", "classify", "a0")
    doc = json.loads(out)
    assert code == 0
    assert doc["ring"] == "k[[t]]/(t^2)"
    assert doc["ext1"] == 1
    assert doc["justification"].startswith("arrow-component/n=0")
    assert set(doc) == {"algebra", "input", "canonical", "locus", "ring", "ext1", "justification"}


def test_classify_simple(capsys):
    code, out, _ = call(capsys, "--m", "3", "--N", "1", "--format", "json", "classify", "e0")
    doc = json.loads(out)
    assert code == 0 and doc["ring"] == "k" and doc["justification"] == "simple-component"


def test_validate_echoes_canonical(capsys):
    code, out, _ = call(capsys, "--m", "6", "--N", "1", "--format", "json", "validate", "A5- a4 A3- a2 A1- a0")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"][0]["valid"]
    # the canonical orientation is the inverse word
    assert doc["results"][0]["canonical"] == "a0- A1 a2- A3 a4- A5"


def test_domain_error_exit_1(capsys):
    code, out, _ = call(capsys, "--m", "3", "--N", "1", "--format", "json", "validate", "a0 a1")
    assert code == 1
    assert json.loads(out)["error"]["error"] == "COMPOSITION_UNDEFINED"
    code, out, _ = call(capsys, "--m", "3", "--N", "1", "--format", "json", "validate", "a1 a0")
    assert code == 1
    assert json.loads(out)["error"]["error"] == "FORBIDDEN_SUBWORD"
    code, _, err = call(capsys, "--m", "3", "--N", "1", "validate", "a0 A0")
    assert code == 1 and "FORBIDDEN_SUBWORD" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--m", "3", "frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["classify", "a0"])
    assert exc.value.code == 2


def test_enumerate_count(capsys):
    code, out, _ = call(capsys, "--m", "3", "--N", "1", "--max-len", "1", "--format", "json", "enumerate")
    assert code == 0 and json.loads(out)["count"] == 9


def test_hom_and_ext(capsys):
    _, out, _ = call(capsys, "--m", "3", "--N", "2", "--format", "json", "hom", "a0 A0 a0", "a0 A0 a0")
    doc = json.loads(out)
    assert doc["basis_size"] == doc["oracle_dim"] == 2
    _, out, _ = call(capsys, "--m", "3", "--N", "2", "--format", "json", "ext", "a0", "a0")
    assert json.loads(out)["dim"] == 1
    _, out, _ = call(capsys, "--m", "3", "--N", "2", "--format", "json", "stable-hom", "a0", "a0")
    assert json.loads(out)["dim"] == 1


def test_omega_and_orbit(capsys):
    _, out, _ = call(capsys, "--m", "3", "--N", "1", "--format", "json", "omega", "e0")
    doc = json.loads(out)
    assert doc["verified"] and doc["omega"] == "a2- A0"
    _, out, _ = call(capsys, "--m", "3", "--N", "1", "--format", "json", "omega", "a2- A0", "--power", "-1")
    assert json.loads(out)["omega"] == "e0"
    _, out, _ = call(capsys, "--m", "3", "--N", "1", "--radius", "1", "--format", "json", "orbit", "e0")
    assert [r["j"] for r in json.loads(out)["orbit"]] == [-1, 0, 1]


def test_component_dot(capsys):
    code, out, _ = call(capsys, "--m", "4", "--N", "2", "--format", "dot", "component", "a0")
    assert code == 0 and out.startswith("digraph") and "hook left" in out


def test_families_and_census(capsys):
    _, out, _ = call(capsys, "--m", "6", "--N", "1", "--format", "json", "families", "Z_PRIME")
    assert json.loads(out)["string"] == "A5- a4 A3- a2 A1- a0"
    _, out, _ = call(capsys, "--m", "5", "--N", "1", "--format", "json", "census", "TUBES")
    assert len(json.loads(out)["tubes"]) == 2


def test_verify_subset(capsys):
    code, out, _ = call(capsys, "verify", "--criteria", "6")
    assert code == 0 and out.startswith("[PASS] 6.")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "udrings", "--m", "3", "--N", "2", "classify", "a0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "k[[t]]/(t^2)" in proc.stdout
