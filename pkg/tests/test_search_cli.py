import json

import pytest

from bihomalg import (BiHomAssociativeAlgebra, FieldSpec, OneSidedBaxter,
                      RBOperator, StructureTable, check_one_sided_baxter,
                      check_rota_baxter, enumerate_rb, enumerate_baxter,
                      index_to_matrix, parse_spec, serialize)
from bihomalg.cli import main
from bihomalg.errors import BudgetExceeded
from bihomalg.families import two_param_algebra
from bihomalg.search import BUDGET_ENV_VAR
from conftest import truncated_poly_algebra

Q = FieldSpec.rational()


def prime_truncated(p, dim):
    return truncated_poly_algebra(FieldSpec.prime(p), dim)


def two_param_f(p, a, b):
    f = FieldSpec.prime(p)
    return two_param_algebra(f, f.from_int(a), f.from_int(b))


def idempotent_line(p):
    """The one-dimensional algebra e*e = e over F_p."""
    f = FieldSpec.prime(p)
    table = StructureTable(f, (((f.one(),),),))
    return BiHomAssociativeAlgebra.associative(f, table)


def test_index_to_matrix_order():
    f = FieldSpec.prime(3)
    m = index_to_matrix(f, 2, 1)  # digit 1 in entry (0,0)
    assert m.entries[0][0].value == 1
    assert all(m.entries[i][j].value == 0 for i in range(2) for j in range(2)
               if (i, j) != (0, 0))
    m = index_to_matrix(f, 2, 3)  # digit 1 in entry (0,1)
    assert m.entries[0][1].value == 1
    m = index_to_matrix(f, 2, 3 ** 2)  # digit 1 in entry (1,0)
    assert m.entries[1][0].value == 1


def test_enumerate_rb_dim1_solution_sets():
    A = idempotent_line(3)
    f = A.field
    w0 = enumerate_rb(A, f.zero())
    assert [m.entries[0][0].value for m in w0.operators] == [0]
    w1 = enumerate_rb(A, f.one())
    assert [m.entries[0][0].value for m in w1.operators] == [0, 2]
    assert w0.examined == 3


def test_enumerate_rb_matches_direct_check():
    A = two_param_f(3, 2, 1)
    res = enumerate_rb(A, A.field.zero())
    direct = [k for k in range(3 ** 4)
              if check_rota_baxter(
                  A, RBOperator(index_to_matrix(A.field, 2, k),
                                A.field.zero())).passed]
    assert len(res.operators) == len(direct)
    assert res.examined == 81


def test_enumerate_rb_jobs_deterministic():
    A = two_param_f(3, 2, 1)
    single = enumerate_rb(A, A.field.zero(), jobs=1)
    multi = enumerate_rb(A, A.field.zero(), jobs=2)
    assert single.operators == multi.operators


def test_enumerate_baxter():
    A = idempotent_line(3)
    res = enumerate_baxter(A, "right")
    for m in res.operators:
        assert check_one_sided_baxter(A, OneSidedBaxter(m, "right")).passed
    # identity and zero are always there
    values = [m.entries[0][0].value for m in res.operators]
    assert 0 in values and 1 in values
    with pytest.raises(ValueError):
        enumerate_baxter(A, "middle")


def test_budget_enforced(monkeypatch):
    A = prime_truncated(5, 3)  # 5^9 candidates, far over any small budget
    monkeypatch.setenv(BUDGET_ENV_VAR, "1000")
    with pytest.raises(BudgetExceeded):
        enumerate_rb(A, A.field.zero())
    monkeypatch.setenv(BUDGET_ENV_VAR, "100")
    B = idempotent_line(3)
    assert enumerate_rb(B, B.field.zero()).examined == 3


def test_enumeration_requires_prime_field(qx2):
    with pytest.raises(ValueError):
        enumerate_rb(qx2, Q.zero())


def spec_text(A, extra=None):
    parts = {"structure": A}
    if extra:
        parts.update(extra)
    return serialize(parts)


def write_spec(tmp_path, name, A, extra=None):
    path = tmp_path / name
    path.write_text(spec_text(A, extra) + "\n")
    return str(path)


def test_spec_round_trip(qx3, qx3_rb):
    text = spec_text(qx3, {"rota_baxter": qx3_rb})
    parts = parse_spec(text)
    assert parts["structure"] == qx3
    assert parts["rota_baxter"] == qx3_rb
    assert parse_spec(serialize(parts))["structure"] == qx3


def test_spec_rejects_floats_and_bad_kind():
    from bihomalg.errors import SpecFileError
    doc = json.loads(spec_text(prime_truncated(3, 2)))
    doc["tables"]["mu"][0][0][0] = 1.5
    with pytest.raises(SpecFileError):
        parse_spec(json.dumps(doc))
    doc = json.loads(spec_text(prime_truncated(3, 2)))
    doc["kind"] = "octo"
    with pytest.raises(SpecFileError):
        parse_spec(json.dumps(doc))


def test_cli_check_pass_and_fail(tmp_path, capsys, qx3):
    good = write_spec(tmp_path, "good.json", qx3)
    assert main(["check", good]) == 0
    assert "passed" in capsys.readouterr().out
    doc = json.loads(spec_text(qx3))
    doc["alpha"][0][1] = "1"  # breaks multiplicativity
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "violation" in out and "failed" in out


def test_cli_check_kind_mismatch(tmp_path, capsys, qx3):
    path = write_spec(tmp_path, "a.json", qx3)
    assert main(["check", path, "--kind", "dend"]) == 2


def test_cli_parse_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    assert main(["check", str(path)]) == 2
    assert main(["check", str(tmp_path / "absent.json")]) == 2
    assert main(["no-such-command"]) == 2


def test_cli_derive_rb_tridend(tmp_path, capsys, qx3, qx3_rb):
    src = write_spec(tmp_path, "a.json", qx3, {"rota_baxter": qx3_rb})
    out_path = tmp_path / "derived.json"
    assert main(["derive", src, "--via", "rb-tridend", "-o", str(out_path)]) == 0
    derived = parse_spec(out_path.read_text())["structure"]
    assert main(["check", str(out_path)]) == 0
    from bihomalg import rb_derive
    assert derived == rb_derive(qx3, qx3_rb)


def test_cli_derive_yau(tmp_path, capsys, qx3):
    src = write_spec(tmp_path, "a.json", qx3)
    scaling = json.dumps([["1", "0", "0"], ["0", "2", "0"], ["0", "0", "4"]])
    assert main(["derive", src, "--via", "yau",
                 "--atilde", scaling, "--btilde", scaling]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["tables"]["mu"][1][1][2] == "4"
    # a non-multiplicative twist map is an axiom failure, exit 1
    shift = json.dumps([["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"]])
    assert main(["derive", src, "--via", "yau",
                 "--atilde", shift, "--btilde", shift]) == 1


def test_cli_derive_missing_block(tmp_path, capsys, qx3):
    src = write_spec(tmp_path, "a.json", qx3)
    assert main(["derive", src, "--via", "rb-tridend"]) == 2


def test_cli_derive_rb_twistor_and_compose(tmp_path, capsys, qx3, qx3_rb):
    src = write_spec(tmp_path, "a.json", qx3, {"rota_baxter": qx3_rb})
    tw_path = tmp_path / "tw.json"
    assert main(["derive", src, "--via", "rb-twistor", "-o", str(tw_path)]) == 0
    parts = parse_spec(tw_path.read_text())
    assert "twistor" in parts
    # compose the twistor with itself in commuting mode over the base algebra
    base = write_spec(tmp_path, "base.json", qx3,
                      {"twistor": parts["twistor"]})
    assert main(["derive", base, base, "--via", "compose-twistor",
                 "--mode", "commuting"]) == 0


def test_cli_trees_enumerate(capsys):
    assert main(["trees", "enumerate", "-n", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert sorted(lines) == ["((L L) L)", "(L (L L))"]


def test_cli_trees_act(tmp_path, capsys, qx3, qx3_rb):
    src = write_spec(tmp_path, "a.json", qx3, {"rota_baxter": qx3_rb})
    elements = json.dumps([["0", "1", "0"], ["0", "1", "0"]])
    assert main(["trees", "act", "(L[0,0;0] L[0,0;0]){1}", src, elements]) == 0
    out = capsys.readouterr().out.strip()
    # R(x . x) = R(x^2) = 0 at the truncation edge
    assert out == "[0, 0, 0]"


def test_cli_trees_reduce(tmp_path, capsys):
    doc = {"field": {"kind": "rational"}, "rank": 1,
           "terms": [
               {"tree": "((L[0,0;0] L[0,0;0]){0} L[0,1;0]){0}",
                "word": [0, 0, 0], "coeff": "1"},
               {"tree": "(L[1,0;0] (L[0,0;0] L[0,0;0]){0}){0}",
                "word": [0, 0, 0], "coeff": "-1"}]}
    path = tmp_path / "elt.json"
    path.write_text(json.dumps(doc))
    assert main(["trees", "reduce", str(path), "--max-leaves", "3",
                 "--max-ab", "1", "--max-r", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["terms"] == []


def test_cli_search(tmp_path, capsys):
    A = idempotent_line(3)
    src = write_spec(tmp_path, "a.json", A)
    assert main(["search", "rb", src, "--weight", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(x) for x in lines] == [[["0"]], [["2"]]]
    assert main(["search", "baxter", src, "--side", "left"]) == 0


def test_cli_search_budget(tmp_path, capsys, monkeypatch):
    A = prime_truncated(3, 3)
    src = write_spec(tmp_path, "a.json", A)
    monkeypatch.setenv(BUDGET_ENV_VAR, "10")
    assert main(["search", "rb", src]) == 1


def test_cli_verify_family(capsys):
    assert main(["verify-family", "w1f3"]) == 0
    assert main(["verify-family", "w0f1", "--mode", "sampled",
                 "--samples", json.dumps([{"a": 2, "b": 3, "r": 5}])]) == 0
    # a = 0 is outside the family's domain: evaluation error, exit 1
    assert main(["verify-family", "w0f1", "--mode", "sampled",
                 "--samples", json.dumps([{"a": 0, "b": 3, "r": 5}])]) == 1
    assert main(["verify-family", "w0f1", "--mode", "sampled"]) == 2
