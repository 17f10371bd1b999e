import json
from pathlib import Path

import jsonschema
import pytest

from e6lab.cli import main

DOCS = Path(__file__).resolve().parent.parent / "docs"


def load_schema(name):
    return json.loads((DOCS / name).read_text())


def test_build_writes_valid_algebra_json(tmp_path, capsys):
    out = tmp_path / "model.json"
    rc = main(["build", "tits-o-m3r", "-o", str(out), "--json"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim"] == 78
    assert report["jacobi_ok"] is True
    assert report["killing_signature"] == -26
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("algebra.schema.json"))
    assert doc["dim"] == 78
    assert doc["provenance"]["C"] == "O"


def test_build_unknown_model_usage_error(capsys):
    assert main(["build", "nope", "--json"]) == 2


def test_exported_model_reloads_identically(tmp_path, capsys):
    from e6lab.algcore import algebra_from_json
    from e6lab.catalog import model

    out = tmp_path / "sp8.json"
    assert main(["build", "sp8-e6", "-o", str(out), "--json"]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["provenance"]["odd_bracket_scale"] == "1"
    reloaded = algebra_from_json(doc)
    original, _ = model("sp8-e6")
    assert reloaded.sc == original.alg.sc
    assert reloaded.basis_labels == original.alg.basis_labels


def test_build_deterministic_output(tmp_path, capsys):
    out = tmp_path / "a.json"
    main(["build", "chevalley-e6", "-o", str(out), "--json"])
    first = capsys.readouterr().out
    bytes1 = out.read_bytes()
    main(["build", "chevalley-e6", "-o", str(out), "--json"])
    second = capsys.readouterr().out
    assert first == second
    assert out.read_bytes() == bytes1


def test_grading_command(tmp_path, capsys):
    out = tmp_path / "g.json"
    rc = main(["grading", "gamma4", "--type", "--verify", "--json", "-o", str(out)])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["type"] == [48, 1, 0, 7]
    assert doc["verified"] is True
    gdoc = json.loads(out.read_text())
    jsonschema.validate(gdoc, load_schema("grading.schema.json"))
    assert gdoc["group"] == {"free_rank": 2, "torsion": [2, 2, 2]}


def test_grading_unknown_name(capsys):
    assert main(["grading", "gamma99"]) == 2


def test_killing_command(capsys):
    rc = main(["killing", "tits-rr-albert", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["signature"] == -26
    assert doc["n_plus"] + doc["n_minus"] == 78


def test_constants_command(capsys):
    rc = main(["constants", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["c_der_C"] == "12"
    assert doc["c_der_J"] == "8"
    assert doc["delta"] == "12/5"
    assert doc["alpha"] == "-144"


def test_chevalley_command(tmp_path, capsys):
    csv = tmp_path / "torus.csv"
    rc = main(["chevalley", "--csv", str(csv), "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["roots"] == 72
    assert doc["split_signature"] == 6
    assert doc["inheriting_signatures"] == [-78, -14, 2, 6]
    assert doc["contains_minus_26"] is False
    lines = csv.read_text().strip().split("\n")
    assert len(lines) == 65  # header + 64 torus elements
    assert lines[0].startswith("s1,s2,s3,s4,s5,s6")
    id_row = [l for l in lines[1:] if l.startswith("1,1,1,1,1,1,")][0]
    assert id_row.endswith("78,36,-78,6")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_gamma_mutation_is_detected(monkeypatch):
    # deliberately flip the gamma convention of the "albert-split" ingredient
    # and rebuild: the signature table check must fail (and only then)
    import e6lab.tits as tits_mod
    import e6lab.verify as verify_mod

    monkeypatch.setitem(tits_mod.JORDAN_INGREDIENTS, "albert-split", ("O", (1, 1, 1)))
    tits_mod.tits_model.cache_clear()
    try:
        results = verify_mod.group_jacobson()
        bad = [c.id for c in results if not c.passed]
        # T(C, compact albert) is -78 where -14 was expected
        assert "C03.sig-c-albert-split" in bad
    finally:
        tits_mod.tits_model.cache_clear()
