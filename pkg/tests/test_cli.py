import json

import pytest

from lietensor import heisenberg
from lietensor.cli import (algebra_document, canonical_hash, load_algebra,
                           main, parse_algebra_document)
from lietensor.errors import InvalidInputError


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


H1_DOC = {"field": "Q", "dim": 3, "brackets": [[0, 1, [[2, "1"]]]]}


def test_document_round_trip():
    L = parse_algebra_document(H1_DOC)
    echo = algebra_document(L)
    again = parse_algebra_document(echo)
    assert canonical_hash(algebra_document(again)) == canonical_hash(echo)
    assert L.table == heisenberg(1).table


def test_document_rejections():
    cases = [
        ({"field": "Q", "dim": 3,
          "brackets": [[0, 1, [[2, "1"]]], [1, 0, [[2, "1"]]]]},
         "duplicate unordered pair"),
        ({"field": "Q", "dim": 3, "brackets": [[1, 0, [[2, "1"]]]]},
         "i < j"),
        ({"field": "Q", "dim": 3, "brackets": [[0, 3, [[2, "1"]]]]},
         "out of range"),
        ({"field": "Q", "dim": 3, "brackets": [[0, 1, [[2, 1]]]]},
         "exact string"),
        ({"field": "Q", "dim": 3, "brackets": [[0, 1, [[2, "1.5"]]]]},
         "cannot parse"),
        ({"field": "R", "dim": 1, "brackets": []}, "field"),
        ({"field": "Q", "dim": 3}, "lacks"),
        ({"field": {"Fp": 6}, "dim": 1, "brackets": []}, "not prime"),
    ]
    for doc, fragment in cases:
        with pytest.raises(InvalidInputError) as err:
            parse_algebra_document(doc)
        assert fragment in str(err.value), doc


def test_jacobi_rejection_carries_witness():
    # [x1,x2] = x1 and [x1,x3] = x2 violate the Jacobi identity at (0,1,2)
    doc = {"field": "Q", "dim": 3,
           "brackets": [[0, 1, [[0, "1"]]], [0, 2, [[1, "1"]]]]}
    with pytest.raises(InvalidInputError) as err:
        parse_algebra_document(doc)
    assert "Jacobi" in str(err.value) and "(0, 1, 2)" in str(err.value)


def test_load_algebra_from_file(tmp_path):
    path = tmp_path / "h1.json"
    path.write_text(json.dumps(H1_DOC))
    L, source = load_algebra(str(path))
    assert L.dim == 3 and source == str(path)
    with pytest.raises(InvalidInputError):
        load_algebra(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InvalidInputError):
        load_algebra(str(bad))


def test_info_command(capsys):
    code, doc = run(["info", "heisenberg(2)"], capsys)
    assert code == 0
    assert doc["dimensions"] == {"algebra": 5, "derived": 1, "center": 1}
    assert doc["nilpotency_class"] == 2
    assert doc["lower_central_series"] == [5, 1, 0]


def test_tensor_command_golden(tmp_path, capsys):
    path = tmp_path / "h1.json"
    path.write_text(json.dumps(H1_DOC))
    code, doc = run(["tensor", str(path)], capsys)
    assert code == 0
    d = doc["dimensions"]
    assert (d["tensor_square"], d["square_submodule"], d["exterior_square"],
            d["j2"], d["schur_multiplier"], d["tensor_center"],
            d["exterior_center"], d["abelianization_kernel"]) == \
        (6, 3, 3, 5, 2, 0, 0, 2)
    assert all(v == "pass" for v in doc["verdicts"].values())
    assert doc["subspaces"]["square_submodule"]


def test_present_command(capsys):
    code, doc = run(["present", "heisenberg(1)"], capsys)
    assert code == 0
    assert doc["free"]["dim"] == 5
    assert doc["free"]["hall_basis"][2] == "[x2,x1]"
    assert doc["dimensions"]["schur_multiplier"] == 2
    assert doc["dimensions"]["exterior_square"] == 3


def test_present_rejects_sl2(capsys):
    assert main(["present", "sl2"]) == 2
    assert "nilpotent" in capsys.readouterr().err


def test_cover_command(capsys):
    code, doc = run(["cover", "abelian(2)"], capsys)
    assert code == 0
    assert doc["dimensions"]["cover"] == 3
    assert doc["dimensions"]["multiplier"] == 1
    assert doc["verdicts"] == {"defining_pair": "pass", "cover_theorem": "pass"}


def test_free_nilpotent_command_round_trips(tmp_path, capsys):
    code, doc = run(["free-nilpotent", "-d", "2", "-c", "3"], capsys)
    assert code == 0
    assert doc["dim"] == 5
    assert doc["layers"] == {"1": 2, "2": 1, "3": 2}
    inner = tmp_path / "f23.json"
    inner.write_text(json.dumps(doc["document"]))
    L, _ = load_algebra(str(inner))
    assert L.dim == 5 and L.validate().ok
    assert main(["free-nilpotent", "-d", "2", "-c", "0"]) == 2


def test_verify_command(capsys):
    code, doc = run(["verify", "heisenberg(1)"], capsys)
    assert code == 0
    assert all(v == "pass" for v in doc["verdicts"].values())

    code, doc = run(["verify", "sl2"], capsys)
    assert code == 0
    assert doc["verdicts"]["cover"] == "skipped: not nilpotent"
    assert doc["verdicts"]["cross_oracle"] == "skipped: not nilpotent"
    assert doc["verdicts"]["decomposition"] == "pass"

    code, doc = run(["verify", "zero"], capsys)
    assert code == 0
    assert all(v == 0 for v in doc["dimensions"].values())
    assert all(v == "pass" for v in doc["verdicts"].values())


def test_verify_skips_presentations_for_non_nilpotent_document(tmp_path, capsys):
    doc = {"field": "Q", "dim": 2, "brackets": [[0, 1, [[1, "1"]]]]}
    path = tmp_path / "borel.json"
    path.write_text(json.dumps(doc))
    code, report = run(["verify", str(path)], capsys)
    assert code == 0
    assert report["verdicts"]["cover"] == "skipped: not nilpotent"
    assert report["verdicts"]["decomposition"] == "pass"


def test_verify_over_prime_field(capsys):
    code, doc = run(["verify", "heisenberg(1)", "--field", "F2"], capsys)
    assert code == 0
    assert doc["input"]["document"]["field"] == {"Fp": 2}
    assert all(v == "pass" for v in doc["verdicts"].values())
    assert main(["verify", "sl2", "--field", "2"]) == 2


def test_exit_codes(capsys):
    assert main(["info", "nosuchthing(3)"]) == 2
    capsys.readouterr()
    assert main(["verify"]) == 2
    capsys.readouterr()
    assert main(["info", "sl2", "--field", "F4"]) == 2
    capsys.readouterr()
    assert main(["info", "sl2", "--out", "/nonexistent-dir/report.json"]) == 2
    assert "cannot write report" in capsys.readouterr().err


def test_failed_verdict_gives_exit_code_1(monkeypatch, capsys):
    # Everything passes on real input, so force one verdict to fail to pin
    # the exit-code contract.
    from lietensor import cli
    from lietensor.tensor import Verdict

    monkeypatch.setattr(cli, "verify_cover_theorem",
                        lambda P, cover, tensor=None: Verdict(False, "forced"))
    code, doc = run(["verify", "heisenberg(1)"], capsys)
    assert code == 1
    assert doc["verdicts"]["cover"] == "fail: forced"


def test_document_schemas_are_stable(capsys):
    code, doc = run(["verify", "heisenberg(1)"], capsys)
    assert sorted(doc) == ["command", "diagnostics", "dimensions", "input",
                           "timings", "verdicts"]
    assert sorted(doc["verdicts"]) == [
        "center_identity", "cover", "cross_oracle", "decomposition",
        "j2_decomposition", "kernel_identity", "square_restriction"]
    assert sorted(doc["dimensions"]) == [
        "abelianization_kernel", "algebra", "center", "derived",
        "exterior_center", "exterior_square", "j2", "schur_multiplier",
        "square_submodule", "tensor_center", "tensor_square"]
    assert sorted(doc["input"]) == ["document", "hash", "source"]
    code, doc = run(["verify", "--catalog"], capsys)
    assert sorted(doc) == ["command", "entries", "summary", "timings"]
    assert sorted(doc["summary"]) == ["fail", "pass", "skipped"]


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["tensor", "heisenberg(2)", "--out", str(a)]) == 0
    assert main(["tensor", "heisenberg(2)", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_timings_flag(capsys):
    code, doc = run(["info", "abelian(2)", "--timings"], capsys)
    assert code == 0
    assert isinstance(doc["timings"]["total_seconds"], float)
    code, doc = run(["info", "abelian(2)"], capsys)
    assert doc["timings"] is None
