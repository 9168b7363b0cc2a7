import io
import json
from pathlib import Path

import pytest

from milnorkit.cli import main

FIX = Path(__file__).parent / "fixtures"
GERMS = FIX / "germs"

MALFORMED = {
    "bad_json.json": "$: line 3, column",
    "bad_utf8.json": "$: not valid UTF-8",
    "nonvanishing.json": "equations[0]: equation does not vanish",
    "too_many_equations.json": "equations: 3 equations in 3 variables",
    "unknown_variable.json": "equations[0]: line 1, column 7: unknown variable 'q'",
    "negative_exponent.json": "equations[0]: line 1, column 3: negative exponent",
    "implicit_product.json": "equations[0]: line 1, column 2",
    "unknown_key.json": "$: unknown keys ['milnor']",
    "missing_equations.json": "equations: missing required key",
    "short_field.json": "vector_field: vector field has 2 components",
    "unbalanced.json": "equations[0]: line 1, column 9: expected ')'",
}


def run(*argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_milnor_quadric():
    rep = run_json("milnor", "--germ", GERMS / "quadric_n3.json")
    assert rep["milnor"] == {"mu": 1, "method": "jacobian-colength", "isolated": True, "smooth": False}
    assert (rep["n"], rep["k"], rep["ambient_dimension"]) == (3, 1, 4)


def test_milnor_fermat_cubic():
    assert run_json("milnor", "--germ", GERMS / "fermat_cubic.json")["milnor"]["mu"] == 8
    code, out, _ = run("milnor", "--germ", GERMS / "fermat_cubic.json")
    assert code == 0 and "mu = 8" in out


def test_milnor_nonisolated_exit_3():
    code, _, err = run("milnor", "--germ", GERMS / "nonisolated.json")
    assert code == 3 and "not isolated" in err


def test_budget_flag_exit_3(monkeypatch):
    code, _, err = run("milnor", "--germ", GERMS / "fermat_cubic.json", "--budget-staircase", "3")
    assert code == 3 and "budget" in err


def test_budget_env_and_flag_precedence(monkeypatch):
    monkeypatch.setenv("MILNORKIT_BUDGET_STAIRCASE", "3")
    code, _, _ = run("milnor", "--germ", GERMS / "fermat_cubic.json")
    assert code == 3
    code, _, _ = run("milnor", "--germ", GERMS / "fermat_cubic.json", "--budget-staircase", "100")
    assert code == 0


def test_decide_quadrics():
    rep3 = run_json("decide", "--germ", GERMS / "quadric_n3.json")
    assert rep3["verdicts"]["contact"]["trivial"] is True
    assert rep3["verdicts"]["foliation"]["trivial"] is True
    rep4 = run_json("decide", "--germ", GERMS / "quadric_n4.json")
    contact = rep4["verdicts"]["contact"]
    assert contact["trivial"] is False and contact["residue"] == 2 and contact["modulus"] == 6
    assert "foliation" not in rep4["verdicts"]


def test_decide_hamiltonian_example():
    rep = run_json("decide", "--germ", GERMS / "quadric_hamiltonian.json")
    assert rep["field"]["gsv"] == {"kind": "gsv-hamiltonian", "value": 0}
    assert rep["field"]["tangent_to_fibres"] is True
    assert rep["verdicts"]["orthogonal_field"]["trivial"] is True
    assert rep["verdicts"]["foliation"]["trivial"] is True
    assert rep["verdicts"]["foliation"]["field"] == "field"


def test_decide_declared_mu():
    rep = run_json("decide", "--germ", GERMS / "icis_declared7.json")
    assert rep["n"] == 4 and rep["milnor"]["method"] == "declared"
    contact = rep["verdicts"]["contact"]
    assert (contact["residue"], contact["modulus"], contact["trivial"]) == (2, 6, False)
    # the flag overrides whatever the germ would give
    rep = run_json("decide", "--germ", GERMS / "quadric_n4.json", "--declared-mu", "7")
    assert rep["verdicts"]["contact"]["residue"] == 2


def test_decide_unsupported_icis_exit_4():
    code, _, err = run("decide", "--germ", GERMS / "icis_undeclared.json")
    assert code == 4 and "declared_milnor" in err


def test_decide_tangency_failure_exit_4():
    code, _, err = run("decide", "--germ", GERMS / "not_tangent.json", "--declared-gsv", "2")
    assert code == 4 and "not tangent" in err


def test_decide_declared_gsv():
    rep = run_json("decide", "--germ", GERMS / "scaled_hamiltonian.json", "--declared-gsv", "4")
    assert rep["field"]["gsv"] == {"kind": "gsv-declared", "value": 4}
    assert rep["field"]["hamiltonian"] is False and rep["field"]["tangent"] is True
    assert rep["verdicts"]["orthogonal_field"]["trivial"] is True
    code, _, _ = run("decide", "--germ", GERMS / "scaled_hamiltonian.json")
    assert code == 4


def test_verdicts_reproduce_from_inputs():
    from milnorkit.obstruction import decide_contact_triviality, decide_orthogonal_triviality

    rep = run_json("decide", "--germ", GERMS / "quadric_n4.json")
    c = rep["verdicts"]["contact"]
    assert decide_contact_triviality(**c["inputs"]).as_dict() == c
    o = rep["verdicts"]["orthogonal_radial"]
    assert decide_orthogonal_triviality(**o["inputs"]).as_dict() == o


def test_index_command():
    rep = run_json("index", "--germ", GERMS / "quadric_hamiltonian.json", "--radial")
    assert rep["indices"]["poincare_hopf"]["value"] == 1
    assert rep["indices"]["gsv_radial"]["value"] == 0
    assert rep["field"]["gsv"]["value"] == 0


def test_hamiltonian_command():
    code, out, _ = run("hamiltonian", "--germ", GERMS / "quadric_n3.json", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["vector_field"] == ["2*z1", "-2*z0", "2*z3", "-2*z2"]
    assert rep["df_of_v"] == "0"
    code, _, _ = run("hamiltonian", "--germ", GERMS / "fermat_cubic.json")
    assert code == 4


@pytest.mark.parametrize("k, n, text", [(4, 2, "Z/2"), (5, 3, "Z"), (2, 3, "0")])
def test_homotopy_command(k, n, text):
    code, out, _ = run("homotopy", k, n)
    assert code == 0 and out.strip() == text


def test_homotopy_out_of_range():
    code, _, err = run("homotopy", 9, 3)
    assert code == 4 and "range" in err


def test_determinism():
    args = ("decide", "--germ", GERMS / "quadric_hamiltonian.json", "--json")
    assert run(*args)[1] == run(*args)[1]


@pytest.mark.parametrize("name", sorted(MALFORMED))
def test_malformed_fixtures_exit_2(name):
    code, out, err = run("milnor", "--germ", FIX / "malformed" / name)
    assert code == 2
    assert MALFORMED[name] in err
    assert out == ""


def test_missing_file_exit_2():
    code, _, err = run("milnor", "--germ", FIX / "nope.json")
    assert code == 2 and "cannot read" in err


def test_bad_arguments_exit_2():
    assert run("milnor")[0] == 2
    assert run("frobnicate")[0] == 2


def test_catalog_list():
    code, out, _ = run("catalog", "list")
    assert code == 0
    labels = [line.split("\t")[0] for line in out.splitlines()]
    for label in ["quadric-n3", "fermat-cubic-surface", "A1", "A2", "A3", "A4", "A5"]:
        assert label in labels
    assert labels == sorted(labels)


def test_catalog_run_passes():
    code, out, _ = run("catalog", "run")
    assert code == 0
    assert all(line.startswith("ok") for line in out.splitlines())


def test_catalog_run_detects_corruption(tmp_path):
    from importlib import resources

    data = json.loads(resources.files("milnorkit").joinpath("data/catalog.json").read_text())
    for entry in data["entries"]:
        if entry["label"] == "E7":
            entry["expected"]["mu"] = 8
    bad = tmp_path / "catalog.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run("catalog", "run", "--catalog", bad)
    assert code == 1
    assert "FAIL  E7: mu: expected 8, got 7" in out
    code, out, _ = run("catalog", "run", "--catalog", bad, "--json", "--workers", "4")
    assert code == 1
    assert json.loads(out)["mismatches"]["E7"] == [{"key": "mu", "expected": 8, "observed": 7}]
