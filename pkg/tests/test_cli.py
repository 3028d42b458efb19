import json
import subprocess
import sys

import pytest

from hrpoly.cli import main

E11 = '{"roots":[["1"],["1"]]}'
O1 = '{"roots":[["1"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_dually_lorentzian_verb(capsys):
    code, out, _ = run(capsys, "dually-lorentzian", "x^3+2*x^2*y+4*x*y^2+8*y^3", "--json")
    assert code == 0
    assert out.strip() == '{"verdict":true}'


def test_pf_check_verb(capsys):
    code, data = run_json(capsys, "pf-check", "1,5,13")
    assert code == 0
    assert data["verdict"] is False
    assert data["witness"] == {"rows": [0, 1, 2], "cols": [1, 2, 3], "value": "-5"}


def test_toric_hr11_verb(capsys):
    code, data = run_json(capsys, "toric", "hr11", "--kappa", "1,1", "--gamma", "1", "--h", "xi1+xi2")
    assert code == 0
    assert data["verdict"] is True
    assert data["M"] == [["0", "1"], ["1", "0"]]
    assert data["inertia"] == [1, 0, 1]


@pytest.mark.parametrize("text, canonical", [("x^2+3*x*y+9*y^2", "x^2+3*x*y+9*y^2"), ("0", "0"), ("1/2*x1^2", "1/2*x1^2")])
def test_parse_verb(capsys, text, canonical):
    code, data = run_json(capsys, "parse", text)
    assert code == 0
    assert data["polynomial"] == canonical


@pytest.mark.parametrize(
    "argv, key, expected",
    [
        (("derived", "x^2+3*x*y+9*y^2", "--i", "1"), "polynomial", "5*x+21*y"),
        (("dual", "x^2+3*x*y+9*y^2"), "polynomial", "9/2*x^2+3*x*y+1/2*y^2"),
        (("truncate", "x^3+x*y", "--kappa", "2,2"), "polynomial", "x*y"),
        (("schur", "1,1", "--e", "2"), "polynomial", "x1^2+x1*x2+x2^2"),
        (("signature", "[[9,3],[3,1]]"), "inertia", [1, 1, 0]),
        (("lorentzian", "x*y"), "verdict", True),
        (("strict-lorentzian", "1/2*x^2+2*x*y+1/2*y^2"), "verdict", True),
        (("strict-lorentzian", "1/2*x^2+x*y+1/2*y^2"), "verdict", False),
        (("dually-lorentzian", "14*x^4+64*x^3*y+312*x^2*y^2+448*x*y^3+512*y^4"), "verdict", False),
        (("cone-lorentzian", "x^2", "--vars", "x,y", "--generators", "[[1,0],[1,1]]"), "verdict", True),
        (("hr-pair", "--H", "[[1,0],[0,-1]]", "--iota", "[[0],[1]]"), "level", "HR"),
        (("pf-check", "1,2,1"), "verdict", True),
        (("monomial-positive", "x^4+2*x^2*y^2+4*x*y^3+y^4"), "verdict", True),
        (("toric", "integrate", "--kappa", "1,1", "--class", "2*xi1*xi2"), "value", "2"),
        (("toric", "seq", "--kappa", "1", "--lam", "1,1", "--mu", "1", "--E", E11, "--F", O1), "sequence", ["6", "3"]),
        (("schur-logconcave", "--f", "x1^2+x1*x2+x2^2", "--m", "1", "--n", "1"), "verdict", True),
        (("product-ineq", "--f", "x1+x2", "--mu", "2", "--nu", "1,1"), "verdict", True),
    ],
)
def test_verbs(capsys, argv, key, expected):
    code, data = run_json(capsys, *argv)
    assert code == 0
    assert data[key] == expected


def test_dominance_verb_includes_chain(capsys):
    code, data = run_json(capsys, "dominance", "3", "1,1,1")
    assert code == 0 and data["verdict"] is True
    assert [step["partition"] for step in data["chain"]] == ["2,1", "3"]


def test_logconcave_verb(capsys):
    code, data = run_json(capsys, "logconcave", "1,0,1")
    assert code == 0
    assert data == {"internal_zeros": True, "log_concave": False, "m_concave": False, "strong": False}


def test_text_mode(capsys):
    code, out, _ = run(capsys, "signature", "[[9,3],[3,1]]")
    assert code == 0
    assert out == "inertia: (1, 1, 0)\n"


def test_payload_from_file(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x^2+3*x*y+9*y^2\n")
    code, data = run_json(capsys, "dually-lorentzian", f"@{path}")
    assert code == 0 and data["verdict"] is True
    code, _, err = run(capsys, "dually-lorentzian", f"@{tmp_path / 'missing'}")
    assert code == 1 and "cannot read" in err


def test_exit_codes(capsys):
    assert run(capsys, "no-such-verb")[0] == 1
    assert run(capsys, "derived", "x")[0] == 1
    code, out, err = run(capsys, "parse", "x^^2", "--json")
    assert code == 2
    assert json.loads(out)["error"] == "PolynomialSyntaxError"
    assert run(capsys, "pf-check", "1,-1")[0] == 2
    assert run(capsys, "dual", "x^2", "--kappa", "1")[0] == 2


def test_global_and_verb_flags_agree(capsys):
    a = run(capsys, "--json", "pf-check", "1,0,1")
    b = run(capsys, "pf-check", "1,0,1", "--json")
    assert a == b


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "hrpoly", "toric", "hr11", "--kappa", "1,1,1", "--gamma", "2*xi1+3*xi2+5*xi3",
            "--h", "xi1+xi2+xi3", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["M"] == [["0", "5", "3"], ["5", "0", "2"], ["3", "2", "0"]]


def test_verify_suite_quick_json(capsys):
    code, data = run_json(capsys, "verify-suite", "quick", "--only", "1,2,8")
    assert code == 0
    assert data["scope"] == "quick"
    assert [c["id"] for c in data["criteria"]] == [1, 2, 8]
    for c in data["criteria"]:
        assert set(c) >= {"id", "name", "passed", "detail", "cases", "witness"}
        assert "elapsed" not in c
        assert c["passed"] is True
    assert data["passed"] is True
