import json

import pytest
from hypothesis import given, settings, strategies as st

from dorroh.cli import run
from dorroh.document import ParseError, parse_document, serialize_document, validate_document
from dorroh.fields import GF, Q
from dorroh.gallery import gallery, gallery_names
from dorroh.linalg import Matrix


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def fixture_file(tmp_path, name, field=None):
    code, out, _ = run(["gallery", name] + (["--field", field] if field else []))
    assert code == 0
    return write(tmp_path, f"{name}.dorroh", out + "\n")


# -- parser -------------------------------------------------------------------

def test_minimal_document():
    doc = parse_document("field Q\nspace I 1 [x]\nmult I (0,0,0) = -2\n")
    assert doc.algebra("I").mult == Matrix(Q, [[-2]])


def test_gf2_fractions():
    doc = parse_document("field GF 2\nspace I 1 [x]\nmult I (0,0,0) = 1/1\n")
    assert doc.algebra("I").mult == Matrix(GF(2), [[1]])
    with pytest.raises(ParseError) as e:
        parse_document("field GF 2\nspace I 1 [x]\nmult I (0,0,0) = 1/0\n")
    assert (e.value.line, e.value.col) == (3, 18)


def test_empty_tables_are_zero():
    doc = parse_document("field Q\nspace I 2 [a,b]\nmult I (0,0,0) = 0\n")
    assert doc.algebra("I").mult.is_zero()


def test_unknown_key_rejected():
    with pytest.raises(ParseError) as e:
        parse_document("field Q\nspace I 1 [x]\nfoo I (0,0,0) = 1\n")
    assert e.value.line == 3


def test_index_out_of_range():
    with pytest.raises(ParseError):
        parse_document("field Q\nspace I 1 [x]\nmult I (0,0,5) = 1\n")


@pytest.mark.parametrize("name", gallery_names())
def test_round_trip(name):
    doc = gallery(name)
    text = serialize_document(doc)
    again = parse_document(text)
    assert again == doc
    assert serialize_document(again) == text


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
                       st.fractions(min_value=-5, max_value=5, max_denominator=7), max_size=8))
def test_round_trip_random_tables(entries):
    lines = ["field Q", "space I 2 [a,b]"] + [f"mult I ({i},{j},{k}) = {v}" for (i, j, k), v in entries.items()]
    doc = parse_document("\n".join(lines))
    assert parse_document(serialize_document(doc)) == doc


# -- commands -------------------------------------------------------------------

def test_check_bialgebra_pass(tmp_path):
    code, out, _ = run(["check-bialgebra", fixture_file(tmp_path, "kc2")])
    assert code == 0 and "result: pass" in out


def test_check_bialgebra_fail_localized(tmp_path):
    code, out, _ = run(["check-bialgebra", fixture_file(tmp_path, "kc2-broken-delta"), "--format", "machine"])
    assert code == 1
    rep = json.loads(out)
    failed = {c["id"]: c for c in rep["conditions"] if c["status"] == "fail"}
    assert set(failed) == {"bialg.comult-product-compatible", "bialg.direct"}
    assert failed["bialg.comult-product-compatible"]["witnesses"] == [{"input": "x⊗x", "lhs": "0", "rhs": "2·x⊗x"}]


def test_solve_antipode_sweedler(tmp_path):
    code, out, _ = run(["solve-antipode", fixture_file(tmp_path, "sweedler"), "--format", "machine"])
    assert code == 0
    data = json.loads(out)["data"]
    assert data["antipode_I"] == [["0", "1"], ["-1", "0"]]
    assert data["solution_space_dim"] == 0


def test_analyze_ideal_ex42(tmp_path):
    code, out, _ = run(["analyze-ideal", fixture_file(tmp_path, "ex42"), "--sub", "K", "--format", "machine"])
    assert code == 0
    assert json.loads(out)["data"]["quotient_dims"] == [1, 1, 1]


def test_enumerate_and_classify(tmp_path):
    path = fixture_file(tmp_path, "gf2-enum-idem")
    code, out, _ = run(["enumerate", path, "--ideals", "--format", "machine"])
    assert code == 0
    code2, out2, _ = run(["classify-unitization", path, "--format", "machine"])
    assert code2 == 0
    assert len(json.loads(out2)["data"]["ideals"]) == 4


def test_budget_refusal_exit_code(tmp_path):
    code, _, err = run(["enumerate", fixture_file(tmp_path, "gf2-enum-idem"), "--ideals", "--budget", "1"])
    assert code == 2 and "raise --budget" in err


def test_every_fixture_validates_through_cli(tmp_path):
    for name in gallery_names():
        code, out, _ = run(["validate", fixture_file(tmp_path, name)])
        assert code == 0, name
        assert validate_document(gallery(name)).passed


def test_machine_report_deterministic(tmp_path):
    path = fixture_file(tmp_path, "trivext-zt-pass")
    first = run(["check-bialgebra", path, "--format", "machine"])
    second = run(["check-bialgebra", path, "--format", "machine"])
    assert first == second
    ids = [c["id"] for c in json.loads(first[1])["conditions"]]
    assert ids == sorted(ids)


def test_parse_error_exit_code(tmp_path):
    code, out, err = run(["validate", write(tmp_path, "bad.dorroh", "field Q\nspace I 1 [x]\nfoo I (0) = 1\n")])
    assert code == 2 and out == "" and "line 3" in err


def test_usage_errors():
    assert run(["no-such-command"])[0] == 2
    assert run(["gallery", "no-such-fixture"])[0] == 2
    assert run(["validate", "/nonexistent/file"])[0] == 2
