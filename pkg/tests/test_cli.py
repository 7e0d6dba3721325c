"""End-to-end command-line behavior: output contracts and exit codes."""

import json

import pytest

from qsphere.cli import REPORT_VERSION, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_sphere_all(capsys, tmp_path):
    report_path = str(tmp_path / "report.json")
    code, out, _ = run(
        capsys, "verify", "--algebra", "sphere", "--N", "2", "--json", report_path
    )
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert "confluence: pass" in lines
    assert "kernel-lemma67: pass" in lines
    assert "star-laws: pass" in lines
    # one line per check; nothing fails (the two-sphere spectrum is flagged)
    assert all(l.endswith(": pass") or l.endswith(": flagged") for l in lines)
    assert "gt-spectrum-thm76: flagged" in lines
    reports = json.load(open(report_path))
    assert len(reports) == len(lines)
    for r in reports:
        assert list(r) == [
            "version", "algebra", "check", "params",
            "status", "details", "counterexample", "timing_ms",
        ]
        assert r["version"] == REPORT_VERSION
        assert r["algebra"] == {"name": "sphere", "N": 2}


def test_verify_single_check(capsys):
    code, out, _ = run(
        capsys, "verify", "--algebra", "suq", "--N", "2", "--checks", "hecke-eq11"
    )
    assert code == 0
    assert out.strip() == "hecke-eq11: pass"


def test_verify_failure_exit_code(capsys):
    # the unitary-group rewriting system is honestly reported non-confluent
    code, out, _ = run(
        capsys, "verify", "--algebra", "uq", "--N", "2", "--checks", "confluence"
    )
    assert code == 1
    assert "confluence: fail" in out


def test_verify_unknown_check(capsys):
    code, _, err = run(
        capsys, "verify", "--algebra", "mq", "--N", "2", "--checks", "bogus"
    )
    assert code == 2
    assert "unknown check" in err


def test_verify_inapplicable_check(capsys):
    code, _, err = run(
        capsys, "verify", "--algebra", "mq", "--N", "2", "--checks", "kernel-lemma67"
    )
    assert code == 2


def test_verify_numeric(capsys):
    code, out, _ = run(
        capsys, "verify", "--algebra", "sphere", "--N", "2",
        "--checks", "confluence", "--q", "1/3",
    )
    assert code == 0
    assert "numeric-evaluation: pass" in out


def test_nf_command(capsys):
    code, out, _ = run(
        capsys, "nf", "--algebra", "sphere", "--N", "2", "--expr", "z[2]*z[1]"
    )
    assert code == 0
    assert out.strip() == "q^-1*z[1]*z[2]"


def test_nf_parse_error(capsys):
    code, _, err = run(capsys, "nf", "--algebra", "sphere", "--N", "2", "--expr", "z[")
    assert code == 2
    assert "syntax error" in err


def test_nf_bad_index(capsys):
    code, _, err = run(
        capsys, "nf", "--algebra", "sphere", "--N", "2", "--expr", "z[5]"
    )
    assert code == 2
    assert "not a generator" in err


def test_det_command(capsys):
    code, out, _ = run(capsys, "det", "--N", "2")
    assert code == 0
    assert out.strip() == "u[1,1]*u[2,2]-q*u[1,2]*u[2,1]"


def test_basis_command(capsys):
    code, out, _ = run(
        capsys, "basis", "--algebra", "sphere", "--N", "2", "--max-degree", "2"
    )
    assert code == 0
    assert "degree 0: 1" in out
    assert "degree 1: 4" in out


def test_spectrum_command(capsys, tmp_path):
    path = str(tmp_path / "spec.json")
    code, out, _ = run(capsys, "spectrum", "--N", "3", "--max-eig", "2", "--json", path)
    assert code == 0
    assert "eigenvalue 2: multiplicity 14" in out
    assert "flagged" not in out
    data = json.load(open(path))
    assert {"eigenvalue": 2, "multiplicity": 14} == {
        k: v
        for k, v in next(
            e for e in data["spectrum"] if e["eigenvalue"] == 2
        ).items()
        if k in ("eigenvalue", "multiplicity")
    }


def test_spectrum_n2_flagged(capsys):
    code, out, _ = run(capsys, "spectrum", "--N", "2", "--max-eig", "1")
    assert code == 0
    assert "flagged" in out


def test_rform_command(capsys):
    code, out, _ = run(
        capsys, "rform", "--N", "2", "--left", "u[1,1]", "--right", "u[1,1]"
    )
    assert code == 0
    assert out.strip() == "t^-1"


def test_morphism_presets(capsys):
    for target in ("identity", "torus"):
        code, out, _ = run(capsys, "morphism", "--N", "2", "--target", target)
        assert code == 0
        assert "morphism: ok" in out


def test_morphism_free_fail(capsys):
    code, out, _ = run(capsys, "morphism", "--N", "2", "--target", "free-fail")
    assert code == 0
    assert "fails at hypothesis (ii)" in out


def test_bad_arguments(capsys):
    assert run(capsys, "verify", "--algebra", "nope", "--N", "2")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_cache_dir_warm_run_identical(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    args = (
        "verify", "--algebra", "suq", "--N", "2",
        "--checks", "matrix-identities", "--cache-dir", cache,
    )
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
