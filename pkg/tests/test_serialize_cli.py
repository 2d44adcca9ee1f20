"""The algebra-file interchange format and the command line surface.

A parse that returns is a certified object: every constructor rechecks its
axioms, so the error tests below double as validation tests.  CLI checks
call main() in-process and assert on exit codes and captured output.
"""

import json

import pytest

from gradlie.cli import main
from gradlie.errors import JacobiViolation, ParseError
from gradlie.gallery import (
    heis3,
    jordan_sym2,
    m_n_transpose,
    p_mod_i,
    p_mod_i_small,
    pair_padded,
    pair_rect,
    padded_subpair,
    sl2,
    triple_2xyz,
)
from gradlie.serialize import (
    load_path,
    dump_path,
    parse_algebra,
    serialize_algebra,
)
from gradlie.scalars import GF, QQ

F5 = GF(5)


# -- roundtrips ---------------------------------------------------------------


def test_lie_roundtrip_is_canonical():
    text = serialize_algebra(sl2())
    af = parse_algebra(text)
    assert af.kind == "lie"
    assert af.algebra == sl2()
    assert serialize_algebra(af.algebra) == text
    assert text.endswith("\n")


def test_lie_roundtrip_over_f5():
    text = serialize_algebra(heis3(F5))
    af = parse_algebra(text)
    assert af.algebra.field.p == 5
    assert serialize_algebra(af.algebra) == text


def test_assoc_roundtrip_keeps_involution():
    a = m_n_transpose(2)
    text = serialize_algebra(a)
    af = parse_algebra(text)
    assert af.kind == "assoc"
    assert af.algebra.involution == a.involution
    assert serialize_algebra(af.algebra) == text


def test_pair_triple_algebra_roundtrips():
    for obj, kind in ((pair_rect(1, 2, F5), "jordan_pair"),
                      (triple_2xyz(), "jordan_triple"),
                      (jordan_sym2(), "jordan_algebra")):
        text = serialize_algebra(obj)
        af = parse_algebra(text)
        assert af.kind == kind
        assert serialize_algebra(af.algebra) == text


def test_subalgebra_marker_roundtrip():
    a = p_mod_i()
    text = serialize_algebra(a, subspace=p_mod_i_small(a))
    af = parse_algebra(text)
    assert af.subspace is not None
    assert af.subspace.dim == 6
    assert serialize_algebra(af.algebra, subspace=af.subspace) == text


def test_subpair_marker_roundtrip():
    pp = pair_padded()
    text = serialize_algebra(pp, subspace=padded_subpair(pp))
    af = parse_algebra(text)
    assert af.subspace.dims() == (1, 1)
    assert serialize_algebra(af.algebra, subspace=af.subspace) == text


# -- parse and validation failures ---------------------------------------------


def test_parse_rejects_malformed_documents():
    with pytest.raises(ParseError):
        parse_algebra("not json at all {")
    with pytest.raises(ParseError):
        parse_algebra(json.dumps({"format": "algebra-file", "version": 2}))
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(
            {"format": "algebra-file", "version": 1, "kind": "sandwich"}))


def test_parse_rejects_bad_scalars():
    doc = json.loads(serialize_algebra(sl2()))
    doc["scalars"] = {"Fp": 6}
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc))
    doc2 = json.loads(serialize_algebra(sl2()))
    for entry in doc2["table"]:
        entry[2][0][1] = "1/0"
        break
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc2))


def test_parse_rejects_out_of_range_indices():
    doc = json.loads(serialize_algebra(sl2()))
    doc["table"][0][2][0][0] = 17
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc))


def test_parse_rejects_degree_mismatch():
    doc = json.loads(serialize_algebra(sl2()))
    doc["grading"]["degrees"] = [1, -1]
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc))
    doc["grading"] = {"group": "trivial", "degrees": [0, 0, 1]}
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc))


def test_parse_runs_axiom_validation():
    doc = json.loads(serialize_algebra(sl2()))
    # flip the sign of [e, h] only; the (e, f, h) Jacobi cycle then sums
    # to -4h (flipping [e, f] alone would just rescale a basis vector)
    for entry in doc["table"]:
        if entry[0] == 0 and entry[1] == 2:
            for pair in entry[2]:
                pair[1] = pair[1].lstrip("-") if pair[1].startswith("-") \
                    else "-" + pair[1]
    with pytest.raises(JacobiViolation):
        parse_algebra(json.dumps(doc))


def test_at_most_one_marked_subobject():
    doc = json.loads(serialize_algebra(p_mod_i(),
                                       subspace=p_mod_i_small(p_mod_i())))
    doc["subpair"] = {"plus": [], "minus": []}
    with pytest.raises(ParseError):
        parse_algebra(json.dumps(doc))


# -- command line ---------------------------------------------------------------


@pytest.fixture
def pmi_file(tmp_path):
    a = p_mod_i()
    path = tmp_path / "pmi.json"
    dump_path(str(path), a, subspace=p_mod_i_small(a))
    return str(path)


@pytest.fixture
def sl2_file(tmp_path):
    path = tmp_path / "sl2.json"
    dump_path(str(path), sl2())
    return str(path)


def test_cli_validate(sl2_file, capsys):
    assert main(["validate", sl2_file]) == 0
    out = capsys.readouterr().out
    assert "kind: lie" in out and "dim: 3" in out


def test_cli_validate_rejects_corrupt_files(tmp_path, capsys):
    doc = json.loads(serialize_algebra(sl2()))
    doc["table"][0][2][0][1] = "1/0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["validate", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_validate_missing_file(capsys):
    assert main(["validate", "/nonexistent/nope.json"]) == 2


def test_cli_analyze_text_and_json(sl2_file, capsys):
    assert main(["analyze", sl2_file]) == 0
    out = capsys.readouterr().out
    assert "semiprime: True (killing-criterion)" in out
    assert main(["analyze", "--format", "json", sl2_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["semiprime"] is True and doc["dim"] == 3


def test_cli_qmax(sl2_file, capsys):
    assert main(["qmax", "--format", "json", sl2_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] == 3
    assert doc["embedding_rank"] == 3


def test_cli_check_quotient_exit_codes(pmi_file, capsys):
    assert main(["check-quotient", "--graded", "--weak", pmi_file]) == 0
    capsys.readouterr()
    assert main(["check-quotient", "--graded", pmi_file]) == 1
    out = capsys.readouterr().out
    assert "witness: x3" in out


def test_cli_tkk_emits_a_lie_file(tmp_path, capsys):
    path = tmp_path / "rect.json"
    dump_path(str(path), pair_rect(1, 2))
    assert main(["tkk", str(path)]) == 0
    af = parse_algebra(capsys.readouterr().out)
    assert af.kind == "lie"
    assert af.algebra.dim == 8


def test_cli_mquotients(tmp_path, capsys):
    pp = pair_padded(F5)
    bad = tmp_path / "padded.json"
    dump_path(str(bad), pp, subspace=padded_subpair(pp))
    assert main(["mquotients", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "witness" in out
    ref = tmp_path / "ref.json"
    pf = pair_rect(1, 2)
    from gradlie.jordan import full_subpair
    dump_path(str(ref), pf, subspace=full_subpair(pf))
    assert main(["mquotients", str(ref)]) == 0


def test_cli_jmax(tmp_path, capsys):
    path = tmp_path / "sym2.json"
    dump_path(str(path), jordan_sym2())
    assert main(["jmax", "--format", "json", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "true"


def test_cli_gallery_is_deterministic(capsys):
    assert main(["gallery", "sl2"]) == 0
    first = capsys.readouterr().out
    assert main(["gallery", "sl2"]) == 0
    assert capsys.readouterr().out == first
    af = parse_algebra(first)
    assert af.algebra == sl2()


def test_cli_gallery_variants(capsys):
    assert main(["gallery", "p_mod_i"]) == 0
    af = parse_algebra(capsys.readouterr().out)
    assert af.subspace is not None and af.subspace.dim == 6
    assert main(["gallery", "--scalars", "5", "heis3"]) == 0
    af5 = parse_algebra(capsys.readouterr().out)
    assert af5.algebra.field.p == 5
    assert main(["gallery", "sln_e11(3)"]) == 0
    assert parse_algebra(capsys.readouterr().out).algebra.dim == 8
    assert main(["gallery", "pair_rect(1,2)"]) == 0
    assert parse_algebra(capsys.readouterr().out).kind == "jordan_pair"
    # the padded pair ships with its live subpair marked so mquotients
    # can run straight off the generated file
    assert main(["gallery", "pair_padded"]) == 0
    padded = parse_algebra(capsys.readouterr().out)
    assert padded.subspace is not None and padded.subspace.dims() == (1, 1)


def test_cli_gallery_rejects_unknown_and_oversized(capsys):
    assert main(["gallery", "so_unknown"]) == 2
    capsys.readouterr()
    assert main(["gallery", "sln_e11(9)"]) == 2
    capsys.readouterr()
    assert main(["gallery", "--scalars", "f5", "sl2"]) == 2


def test_cli_budget_flag_surfaces_dimension_errors(tmp_path, capsys):
    h5 = tmp_path / "h5.json"
    dump_path(str(h5), heis3(F5))
    assert main(["analyze", "--budget", "1", str(h5)]) == 2
    assert "error" in capsys.readouterr().err


def test_budget_env_is_honored(tmp_path, capsys, monkeypatch):
    h5 = tmp_path / "h5.json"
    dump_path(str(h5), heis3(F5))
    monkeypatch.setenv("GRADLIE_BUDGET", "1")
    assert main(["analyze", str(h5)]) == 2
    monkeypatch.setenv("GRADLIE_BUDGET", "1000000")
    assert main(["analyze", str(h5)]) == 0
