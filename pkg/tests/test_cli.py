import json

import pytest

from b2semiring.algebra import Valuation, eval_poly
from b2semiring.cli import main
from b2semiring.terms import parse_polynomial as P


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_valid_and_invalid(capsys):
    assert run(capsys, "check", "xx", "xxx")[0] == 0
    code, out, _ = run(capsys, "check", "xy", "yx")
    assert code == 1 and "invalid" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--json", "xyx", "xyxy")
    data = json.loads(out)
    assert code == 1
    assert data["valid"] is False and data["failed_condition"] == "Term"


def test_json_flag_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "check", "xx", "xxx")
    assert code == 0 and json.loads(out)["valid"] is True


def test_rook_as_inequality(capsys):
    assert run(capsys, "check", "--le", "x2z2", "x1z1 + x1z2 + x2z1")[0] == 0


def test_rook_as_identity_fails_on_content(capsys):
    # the two sides have different letters, so as an identity this is false
    code, out, _ = run(capsys, "check", "--json", "x2z2", "x1z1 + x1z2 + x2z1 + x2z2")
    assert code == 1
    assert json.loads(out)["failed_condition"] == "Content"


def test_parse_error(capsys):
    code, _, err = run(capsys, "check", "x + ", "x")
    assert code == 2
    assert "parse error" in err and "^" in err


def test_usage_error(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "selftest", "--family", "1,2")[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--json", "xy", "yx")
    data = json.loads(out)
    assert code == 1 and data["valid"] is False
    v = Valuation.from_json(data["counterexample"])
    assert eval_poly(P("xy"), v) != eval_poly(P("yx"), v)
    assert run(capsys, "oracle", "xx", "xxx")[0] == 0


def test_oracle_letter_limit(capsys):
    code, _, err = run(capsys, "oracle", "--max-letters", "2", "xyz", "zyx")
    assert code == 2 and "error" in err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--json", "xyx", "yxy")
    data = json.loads(out)
    assert code == 0
    v = Valuation.from_json(data["valuation"])
    assert eval_poly(P("xyx"), v) != eval_poly(P("yxy"), v)
    assert data["lhs_value"] != data["rhs_value"]


def test_witness_of_valid_identity(capsys):
    code, out, err = run(capsys, "witness", "xx", "xxx")
    assert code == 1 and out == "" and "no witness" in err


def test_rho(capsys):
    code, out, _ = run(capsys, "rho", "xy")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"classes", "init", "term"}
    flat = sorted(p for c in data["classes"] for p in c)
    assert flat == ["x:1", "x:2", "y:1", "y:2"]


def test_derive_then_verify(tmp_path, capsys):
    path = tmp_path / "proof.json"
    code, _, _ = run(capsys, "derive", "xxyy", "yyxx", "-o", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())) == 2
    assert run(capsys, "verify", str(path), "--against", "xxyy", "yyxx")[0] == 0
    # the same proof does not establish a different identity
    code, out, _ = run(capsys, "verify", str(path), "--against", "xxyy", "yyxxx")
    assert code == 1 and "rejected" in out


def test_derive_to_stdout(capsys):
    code, out, _ = run(capsys, "derive", "xx", "xxx")
    assert code == 0
    assert [d["direction"] for d in json.loads(out)] == ["lhs<=rhs", "rhs<=lhs"]


def test_derive_invalid(capsys):
    code, out, err = run(capsys, "derive", "xy", "yx")
    assert code == 1 and out == ""


def test_verify_tampered(tmp_path, capsys):
    path = tmp_path / "proof.json"
    run(capsys, "derive", "xx", "xxx", "-o", str(path))
    data = json.loads(path.read_text())
    for d in data:
        for n in d["nodes"]:
            if n["rule"] == "axiom":
                n["subst"]["x1"] += "x"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--json", str(path), "--against", "xx", "xxx")
    assert code == 1 and json.loads(out)["errors"]


def test_verify_unreadable(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert run(capsys, "verify", str(path), "--against", "x", "x")[0] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--json", "--family", "1,2,2")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True
    assert data["pairs"] == data["polynomials"] ** 2
