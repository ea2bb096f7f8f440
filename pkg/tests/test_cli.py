import json
from pathlib import Path

import pytest

from reslat.cli import main
from reslat.formats import (
    expr_from_dict,
    expr_to_dict,
    lattice_from_dict,
    lattice_to_dict,
    load_algebra,
    ring_spec_from_dict,
    ring_spec_to_dict,
)
from reslat.corpus import commutative_specs, example3
from reslat.expr import DirProd, OrdProd, Ring
from reslat.rings import Product, Zn

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    d = tmp_path_factory.mktemp("corpus")
    assert main(["seed-corpus", str(d)]) == 0
    return d


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_seed_corpus_contents(corpus):
    rings = sorted(p.name for p in (corpus / "rings").iterdir())
    assert "Z2_X_Y_X_2_XY_Y_2.json" in rings and "M2_Z2.json" in rings
    assert len(rings) >= 25
    assert (corpus / "lattices" / "example3.json").exists()


def test_check_prel_witness(capsys, corpus):
    code, out, _ = run(capsys, "check", corpus / "lattices/example3.json", "--property", "prel")
    assert code == 1
    assert "(a,b): c ≠ 1" in out


def test_check_divisible_holds(capsys, corpus):
    code, out, _ = run(capsys, "check", corpus / "lattices/example3.json", "--property", "divisible")
    assert code == 0 and out.startswith("divisible: yes")


def test_check_ring_file(capsys, corpus):
    code, out, _ = run(capsys, "check", corpus / "rings/Z12.json", "--property", "mv")
    assert code == 0 and "expression: Id(Z12)" in out


def test_check_diamond(capsys, corpus):
    code, out, _ = run(capsys, "check", corpus / "lattices/diamond_meet.json")
    assert code == 1 and "ResiduumMissing" in out
    code, _, err = run(capsys, "check", corpus / "lattices/diamond_meet.json", "--property", "bl")
    assert code == 2 and "ResiduumMissing" in err


def test_invalid_inputs(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "not valid JSON" in err
    code, _, err = run(capsys, "check", tmp_path / "missing.json")
    assert code == 2
    cyclic = tmp_path / "cyclic.json"
    cyclic.write_text(json.dumps({"size": 2, "leq": [[1, 1], [1, 1]], "odot": [[0, 0], [0, 1]]}))
    code, _, err = run(capsys, "check", cyclic)
    assert code == 2 and "NotAPartialOrder" in err


def test_iso(capsys, corpus):
    code, out, _ = run(capsys, "iso", corpus / "rings/Z4.json", corpus / "rings/Z9.json")
    assert code == 0 and out.splitlines()[0] == "isomorphic"
    assert "(2)->(3)" in out
    code, out, _ = run(capsys, "iso", corpus / "rings/Z4.json", corpus / "rings/Z2xZ2.json")
    assert code == 1


def test_is_multiplication(capsys, corpus):
    code, out, _ = run(capsys, "is-multiplication", corpus / "rings/Z2_X_Y_X_2_XY_Y_2.json")
    assert code == 1 and "((X,Y),(X))" in out
    code, _, _ = run(capsys, "is-multiplication", corpus / "rings/Z30.json")
    assert code == 0


def test_ring_ideals(capsys, corpus, tmp_path):
    out_file = tmp_path / "id.json"
    code, out, _ = run(capsys, "ring-ideals", corpus / "rings/Z12.json", "--lattice-out", out_file)
    assert code == 0 and "ideals: 6" in out and "maximal: 2  prime: 2" in out
    L = load_algebra(out_file)
    assert L.size == 6 and L.name(4) == "(2)"
    code, out, _ = run(capsys, "ring-ideals", corpus / "rings/M2_Z2.json", "--side", "left")
    assert code == 0 and "left ideals: 5" in out


def test_identities(capsys, corpus):
    code, out, _ = run(capsys, "identities", corpus / "rings/Z24.json")
    assert code == 0 and out.count("pass") == 7
    code, _, err = run(capsys, "identities", corpus / "rings/Z2_X_Y_X_2_XY_Y_2.json")
    assert code == 2 and "PreconditionNotDivisible" in err


def test_ordinal_product(capsys, corpus, tmp_path):
    out_file = tmp_path / "p.json"
    code, out, _ = run(capsys, "ordinal-product", corpus / "rings/Z2xZ2.json",
                       corpus / "rings/Z2.json", "-o", out_file)
    assert code == 0 and "expression: Id(Z2xZ2) . Id(Z2)" in out
    assert load_algebra(out_file).odot == example3().odot
    code, _, err = run(capsys, "ordinal-product", corpus / "lattices/example3.json",
                       corpus / "rings/Z2.json")
    assert code == 2 and "NotBLAlgebra" in err


def test_expression_file(capsys, tmp_path, corpus):
    e = {"kind": "ordprod",
         "left": {"kind": "literal", "path": str(corpus / "lattices/example3.json")},
         "right": {"kind": "ring", "spec": {"kind": "Zn", "k": 2}}}
    p = tmp_path / "e.json"
    p.write_text(json.dumps(e))
    code, _, err = run(capsys, "check", p)
    assert code == 2 and "NotBLAlgebra" in err


def test_enumerate_and_skeletons(capsys):
    code, out, _ = run(capsys, "enumerate", 6, "--filter", "divisible-not-bl", "--method", "both")
    assert code == 0 and "count=3" in out
    code, out, _ = run(capsys, "enumerate", 7, "--method", "brute")
    assert code == 2
    code, out, _ = run(capsys, "skeletons", 6)
    assert code == 0 and "lattices: 15" in out


def test_tables_golden(capsys):
    code, out, _ = run(capsys, "tables", "--max", 6)
    assert code == 0
    assert out == (GOLDEN / "tables.txt").read_text()
    code, out, _ = run(capsys, "tables", "--max", 6, "--format", "json")
    assert json.loads(out) == json.loads((GOLDEN / "tables.json").read_text())


@pytest.mark.parametrize("argv", [
    ["tables", "--max", "6", "--format", "json"],
    ["enumerate", "5", "--format", "json"],
    ["skeletons", "5"],
])
def test_byte_identical_reruns(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_enumerate_json_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", 5, "--filter", "divisible", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 10 == len(data["representatives"])
    for rec in data["representatives"]:
        L = lattice_from_dict(rec["lattice"])
        assert lattice_to_dict(L) == rec["lattice"]


def test_format_round_trips():
    for spec in commutative_specs():
        assert ring_spec_from_dict(json.loads(json.dumps(ring_spec_to_dict(spec)))) == spec
    e = OrdProd(Ring(Zn(2)), DirProd(Ring(Product([Zn(2), Zn(3)])), Ring(Zn(4))))
    assert expr_from_dict(json.loads(json.dumps(expr_to_dict(e)))) == e
    L = example3()
    M = lattice_from_dict(json.loads(json.dumps(lattice_to_dict(L))))
    assert (M.odot, M.arrow, M.labels) == (L.odot, L.arrow, L.labels)
