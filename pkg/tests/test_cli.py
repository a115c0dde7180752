"""Command-line interface: verbs, formats, inputs, exit codes."""

import json
import subprocess
import sys

import pytest

from poisson_forge.exactnum import Matrix, Polynomial
from poisson_forge.goldens import default_goldens
from poisson_forge.linclass import Witness


def run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "poisson_forge.cli", *argv],
        capture_output=True, text=True, input=stdin,
    )


def run_json(*argv, stdin=None):
    proc = run_cli(*argv, stdin=stdin)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


CASE8_PAIR = {"k": ["0", "0", "1"],
              "A": [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "0"]]}
BOOK_PAIR = {"k": ["0", "0", "1"],
             "A": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]}
OPEN_BOOK_PAIR = {"k": ["0", "0", "1"],
                  "A": [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]}
XYZ_SIXTH = {"vars": ["x", "y", "z"],
             "terms": [{"exp": [1, 1, 1], "coef": "1/6"}]}


# --- classify --------------------------------------------------------------


def test_classify_scaled_rotation_invariant():
    out = run_json("classify", json.dumps(CASE8_PAIR))
    assert out["case"] == 8
    assert out["a_squared"] == "4"
    assert set(out["witness"]) == {"R", "d"}


def test_classify_zero_structure():
    pair = {"k": ["0", "0", "0"],
            "A": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]}
    assert run_json("classify", json.dumps(pair))["case"] == 1


def test_classify_sheared_hyperbolic():
    # gram of x^2 - 2xy, rank 2 with signature (+,-)
    pair = {"k": ["0", "0", "0"],
            "A": [["1", "-1", "0"], ["-1", "0", "0"], ["0", "0", "0"]]}
    assert run_json("classify", json.dumps(pair))["case"] == 5


def test_classify_table_format():
    proc = run_cli("classify", json.dumps(CASE8_PAIR), "--format", "table")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "case: 8"
    assert lines[1] == "a_squared: 4"


def test_classify_witness_roundtrips():
    out = run_json("classify", json.dumps(CASE8_PAIR))
    witness = Witness.from_json(out["witness"])
    assert witness.to_json() == out["witness"]


def test_incompatible_pair_exits_1():
    pair = {"k": ["0", "0", "1"],
            "A": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]]}
    proc = run_cli("classify", json.dumps(pair))
    assert proc.returncode == 1
    assert "A k != 0" in proc.stderr


def test_bad_json_exits_2():
    proc = run_cli("classify", "this is not json")
    assert proc.returncode == 2
    assert "parse error" in proc.stderr


def test_missing_fields_exit_2():
    proc = run_cli("classify", '{"k": ["0", "0", "0"]}')
    assert proc.returncode == 2


def test_unknown_verb_exits_2():
    proc = run_cli("frobnicate", "{}")
    assert proc.returncode == 2


def test_stdin_and_file_inputs(tmp_path):
    payload = json.dumps(CASE8_PAIR)
    from_stdin = run_json("classify", "-", stdin=payload)
    path = tmp_path / "pair.json"
    path.write_text(payload)
    from_file = run_json("classify", str(path))
    from_inline = run_json("classify", payload)
    assert from_stdin == from_file == from_inline


def test_byte_determinism():
    first = run_cli("classify", json.dumps(CASE8_PAIR))
    second = run_cli("classify", json.dumps(CASE8_PAIR))
    assert first.stdout == second.stdout
    assert first.stdout.encode() == second.stdout.encode()


# --- decompose / bracket / modular / is-poisson ----------------------------


def test_decompose_pair():
    out = run_json("decompose", json.dumps(CASE8_PAIR))
    assert out["k"] == ["0", "0", "1"]
    assert out["square_closed"] is True
    assert out["twist_commutes"] is True


def test_decompose_accepts_field_json():
    # feed the bivector of the same pair through its explicit encoding
    xvar = {"vars": ["x", "y", "z"], "terms": [{"exp": [1, 0, 0], "coef": "4"}]}
    yvar = {"vars": ["x", "y", "z"], "terms": [{"exp": [0, 1, 0], "coef": "-4"}]}
    half_x = {"vars": ["x", "y", "z"], "terms": [{"exp": [1, 0, 0], "coef": "1/2"}]}
    half_y = {"vars": ["x", "y", "z"], "terms": [{"exp": [0, 1, 0], "coef": "1/2"}]}
    field = {"n": 3, "grade": 2, "components": {
        "1,3": {"vars": ["x", "y", "z"],
                "terms": yvar["terms"] + half_x["terms"]},
        "2,3": {"vars": ["x", "y", "z"],
                "terms": xvar["terms"] + half_y["terms"]},
    }}
    out = run_json("decompose", json.dumps(field))
    assert out["k"] == ["0", "0", "1"]


def test_bracket_of_structure_with_itself_vanishes():
    payload = {"u": CASE8_PAIR, "v": CASE8_PAIR}
    out = run_json("bracket", json.dumps(payload))
    assert out == {"n": 3, "grade": 3, "components": {}}


def test_bracket_of_rotation_generators():
    y_dx = {"n": 3, "grade": 1, "components": {
        "1": {"vars": ["x", "y", "z"], "terms": [{"exp": [0, 1, 0], "coef": "1"}]}}}
    x_dy = {"n": 3, "grade": 1, "components": {
        "2": {"vars": ["x", "y", "z"], "terms": [{"exp": [1, 0, 0], "coef": "1"}]}}}
    proc = run_cli("bracket", json.dumps({"u": y_dx, "v": x_dy}),
                   "--format", "table")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(-x)·∂x + (y)·∂y"


def test_modular_is_the_axis_field():
    out = run_json("modular", json.dumps(CASE8_PAIR))
    assert out["grade"] == 1
    assert list(out["components"]) == ["3"]
    assert out["components"]["3"]["terms"] == [{"exp": [0, 0, 0], "coef": "1"}]


def test_is_poisson_verdicts():
    assert run_json("is-poisson", json.dumps(CASE8_PAIR)) == {"is_poisson": True}
    zvar = {"vars": ["x", "y", "z"], "terms": [{"exp": [0, 0, 1], "coef": "1"}]}
    xvar = {"vars": ["x", "y", "z"], "terms": [{"exp": [1, 0, 0], "coef": "1"}]}
    broken = {"n": 3, "grade": 2, "components": {"1,2": zvar, "1,3": xvar}}
    assert run_json("is-poisson", json.dumps(broken)) == {"is_poisson": False}


# --- deform-solve / deform-check -------------------------------------------


def test_deform_solve_axis_pair_distinct_twist():
    payload = {"pair": BOOK_PAIR,
               "K": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-3"]]}
    out = run_json("deform-solve", json.dumps(payload))
    assert out["empty"] is False
    assert out["basis"] == []
    assert Polynomial.from_json(out["particular"]) == Polynomial.from_json(XYZ_SIXTH)


def test_deform_solve_open_book_repeated_twist():
    payload = {"pair": OPEN_BOOK_PAIR,
               "K": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-2"]]}
    out = run_json("deform-solve", json.dumps(payload))
    assert out["empty"] is False
    assert out["basis"] == []
    expected = {"vars": ["x", "y", "z"],
                "terms": [{"exp": [2, 0, 1], "coef": "-2"}]}
    assert Polynomial.from_json(out["particular"]) == Polynomial.from_json(expected)


def test_deform_solve_empty_stratum():
    payload = {"pair": BOOK_PAIR,
               "K": [["-3", "0", "0"], ["0", "3/2", "-1/2"],
                     ["0", "-1/2", "3/2"]]}
    assert run_json("deform-solve", json.dumps(payload)) == {"empty": True}


def test_deform_solve_table_format():
    payload = {"pair": OPEN_BOOK_PAIR,
               "K": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-2"]]}
    proc = run_cli("deform-solve", json.dumps(payload), "--format", "table")
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["particular: -2·x^2z", "basis: (none)"]


def test_deform_solve_rejects_trace():
    payload = {"pair": BOOK_PAIR,
               "K": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
    proc = run_cli("deform-solve", json.dumps(payload))
    assert proc.returncode == 1
    assert "traceless" in proc.stderr


def test_deform_check_verdicts():
    base = {"pair": BOOK_PAIR,
            "K": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-3"]]}
    good = dict(base, F=XYZ_SIXTH)
    assert run_json("deform-check", json.dumps(good)) == {"deforms": True}
    bad = dict(base, F={"vars": ["x", "y", "z"],
                        "terms": [{"exp": [1, 1, 1], "coef": "1"}]})
    assert run_json("deform-check", json.dumps(bad)) == {"deforms": False}


def test_deform_check_rejects_inhomogeneous_potential():
    payload = {"pair": BOOK_PAIR,
               "K": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-3"]],
               "F": {"vars": ["x", "y", "z"],
                     "terms": [{"exp": [1, 0, 0], "coef": "1"}]}}
    proc = run_cli("deform-check", json.dumps(payload))
    assert proc.returncode == 1


# --- orbits ----------------------------------------------------------------


def test_orbits_distinct_eigenvalues():
    payload = {"K": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-3"]]}
    out = run_json("orbits", json.dumps(payload))
    assert out["family"] == "DIAG_DISTINCT"
    assert out["lambdas"] == ["1", "2", "-3"]
    assert out["orbit_count"] == 7
    assert [o["orbit"] for o in out["orbits"]] == [1, 2, 3, 4, 5, 6, 7]
    assert out["orbits"][0]["cubics"] == ["xyz"]
    # every emitted twist re-parses to an exact matrix
    for o in out["orbits"]:
        Matrix.from_json(o["K"])


def test_orbits_with_exact_point():
    payload = {"K": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-3"]],
               "point": ["0", "3", "4"]}
    out = run_json("orbits", json.dumps(payload))
    assert out["point"]["orbit"] == 5
    assert out["point"]["unit"] == ["0", "3/5", "4/5"]


def test_orbits_point_float_fallback():
    payload = {"K": [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]],
               "point": ["1", "2", "3"]}
    out = run_json("orbits", json.dumps(payload))
    assert out["family"] == "NILPOTENT_FULL"
    assert out["point"]["orbit"] == 3
    unit = out["point"]["unit"]
    assert all(isinstance(v, float) for v in unit)
    assert abs(sum(v * v for v in unit) - 1) < 1e-12


def test_orbits_rejects_unstructured_matrix():
    payload = {"K": [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "-2"]]}
    proc = run_cli("orbits", json.dumps(payload))
    assert proc.returncode == 1
    assert "outside" in proc.stderr


# --- verify-paper -----------------------------------------------------------


def test_verify_paper_all_pass():
    proc = run_cli("verify-paper")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[-1] == "35/35 items passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_paper_corrupted_goldens(tmp_path):
    goldens = default_goldens()
    goldens["ten_forms"]["8"]["a_squared"] = "5"
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(goldens))
    proc = run_cli("verify-paper", "--goldens", str(path), "--format", "json")
    assert proc.returncode == 1
    items = json.loads(proc.stdout)
    assert len(items) == 35
    assert all(set(it) == {"item", "status", "details"} for it in items)
    failed = [it for it in items if it["status"] == "FAIL"]
    assert failed, "corruption must surface as FAIL items"
    assert any("expected '5'" in it["details"] for it in failed)
