import csv
import json

import numpy as np
import pytest

from conftest import plane_axis_frame
from fusionweave import (
    DimensionMismatch,
    NonPositiveWeight,
    ParseError,
    canonical_dual,
    frame_from_dict,
    load_frame,
    load_operator,
    load_subspace,
    operator_norm,
    projector,
    save_frame,
)
from fusionweave.cli import main
from fusionweave.worked_examples import builtin_path

PLANE_AXIS_DOC = {
    "dim": 3,
    "subspaces": [{"vectors": [[1, 0, 0], [0, 1, 0]]}, {"vectors": [[0, 0, 1]]}],
}


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_frame_from_dict_plane_axis():
    F = frame_from_dict(PLANE_AXIS_DOC)
    assert F.ambient_dim == 3 and len(F) == 2
    assert F.subspaces[0].dim == 2 and F.subspaces[1].dim == 1
    np.testing.assert_allclose(
        projector(F.subspaces[0]), projector(plane_axis_frame().subspaces[0]), atol=1e-12
    )


def test_frame_document_errors(tmp_path):
    with pytest.raises(NonPositiveWeight):
        frame_from_dict({"dim": 2, "subspaces": [{"vectors": [[1, 0]], "weight": -1}]})
    with pytest.raises(DimensionMismatch):
        frame_from_dict({"dim": 2, "subspaces": [{"vectors": [[1, 0, 0]]}]})
    with pytest.raises(ParseError):
        frame_from_dict({"dim": 0, "subspaces": [{"vectors": [[1]]}]})
    with pytest.raises(ParseError):
        frame_from_dict({"dim": 2, "subspaces": []})
    with pytest.raises(ParseError):
        frame_from_dict({"dim": 2, "subspaces": [{"vectors": [[1, True]]}]})

    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 3,', encoding="utf-8")
    with pytest.raises(ParseError, match="line 1"):
        load_frame(bad)
    with pytest.raises(ParseError):
        load_frame(tmp_path / "missing.json")


def test_operator_document(tmp_path):
    T = load_operator(builtin_path("displayed_inverse"))
    np.testing.assert_allclose(T, [[1, 0, 0], [0, 1, 0], [0, -0.5, 1.25]])

    with pytest.raises(DimensionMismatch):
        load_operator(write_json(tmp_path / "ragged.json", {"rows": [[1, 0], [1]]}))
    with pytest.raises(DimensionMismatch):
        load_operator(write_json(tmp_path / "off.json", {"dim": 3, "rows": [[1, 0], [0, 1]]}))
    rect = load_operator(write_json(tmp_path / "rect.json", {"rows": [[1, 0, 0], [0, 1, 0]]}))
    assert rect.shape == (2, 3)


def test_subspace_document(tmp_path):
    path = write_json(tmp_path / "sub.json", {"dim": 3, "vectors": [[0, 1, 1]]})
    V = load_subspace(path)
    assert V.ambient_dim == 3 and V.dim == 1


def test_frame_roundtrip(tmp_path):
    F = plane_axis_frame()
    D = canonical_dual(F)
    out = tmp_path / "dual.json"
    save_frame(out, D, name="roundtrip")
    back = load_frame(out)
    for A, B in zip(D.subspaces, back.subspaces):
        assert operator_norm(projector(A) - projector(B)) <= 1e-8
    assert json.loads(out.read_text())["name"] == "roundtrip"


def coords_path():
    return str(builtin_path("coordinate_spans_3d"))


def enlarged_path():
    return str(builtin_path("coordinate_spans_enlarged"))


def test_cli_check_and_riesz_exit_codes(tmp_path):
    # the enlarged family is a fusion frame but not a Riesz basis
    assert main(["check", enlarged_path()]) == 0
    assert main(["riesz", enlarged_path()]) == 1
    assert main(["riesz", coords_path()]) == 0

    short = write_json(
        tmp_path / "short.json",
        {"dim": 3, "subspaces": [{"vectors": [[1, 0, 0]]}, {"vectors": [[0, 1, 0]]}]},
    )
    assert main(["check", short]) == 1


def test_cli_input_errors(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.json")]) == 2
    bad = write_json(tmp_path / "bad.json", {"dim": 2, "subspaces": [{"vectors": [[1, 0]], "weight": -1}]})
    assert main(["check", bad]) == 2
    capsys.readouterr()


def test_cli_dual_defect_output(capsys):
    code = main(["dual", str(builtin_path("plane_axis_pair")), "--defect", str(builtin_path("plane_tilted_pair"))])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == "0.447214"


def test_cli_dual_canonical_roundtrip(tmp_path):
    out = tmp_path / "canon.json"
    assert main(["dual", str(builtin_path("plane_axis_pair")), "--canonical", "-o", str(out)]) == 0
    back = load_frame(out)
    for A, B in zip(back.subspaces, plane_axis_frame().subspaces):
        # the pair has identity frame operator, so the dual is itself
        assert operator_norm(projector(A) - projector(B)) <= 1e-8


def test_cli_dual_verify_and_enlarge(tmp_path):
    assert main(["dual", coords_path(), "--verify", enlarged_path()]) == 0
    extras = write_json(tmp_path / "extras.json", {"extras": [[[0, 1, 0]], [], []]})
    out = tmp_path / "enlarged.json"
    assert main(["dual", coords_path(), "--enlarge", extras, "-o", str(out)]) == 0
    grown = load_frame(out)
    assert grown.subspaces[0].dim == 2


def test_cli_weave_csv(tmp_path):
    out = tmp_path / "report.csv"
    code = main(["weave", coords_path(), enlarged_path(), "--csv", str(out)])
    assert code == 0
    with open(out, newline="") as handle:
        rows = list(csv.reader(handle))
    header, body, footer = rows[0], rows[1:-1], rows[-1]
    assert header == ["assignment_id", "labels", "lambda_min", "lambda_max", "is_frame"]
    assert len(body) == 8
    lowers = [float(r[2]) for r in body]
    uppers = [float(r[3]) for r in body]
    assert footer[0] == "universal"
    assert float(footer[2]) == min(lowers)
    assert float(footer[3]) == max(uppers)
    assert footer[4] == "true"
    assert all(r[4] == "true" for r in body)
    assert [r[0] for r in body] == [str(i) for i in range(8)]


def test_cli_weave_negative_and_sampled(tmp_path):
    swapped = write_json(
        tmp_path / "swapped.json",
        {"dim": 2, "subspaces": [{"vectors": [[0, 1]]}, {"vectors": [[1, 0]]}]},
    )
    coords2 = write_json(
        tmp_path / "coords2.json",
        {"dim": 2, "subspaces": [{"vectors": [[1, 0]]}, {"vectors": [[0, 1]]}]},
    )
    assert main(["weave", coords2, swapped]) == 1

    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["weave", coords_path(), enlarged_path(), "--sample", "4", "--seed", "5", "--csv", str(a)]) == 0
    assert main(["weave", coords_path(), enlarged_path(), "--sample", "4", "--seed", "5", "--csv", str(b)]) == 0
    assert a.read_text() == b.read_text()

    assert main(["weave", coords_path(), enlarged_path(), "--max-enum", "4"]) == 2


def test_cli_perturb_checks(tmp_path, capsys):
    identity = write_json(tmp_path / "id.json", {"dim": 3, "rows": np.eye(3).tolist()})
    proj = write_json(tmp_path / "proj.json", {"dim": 3, "rows": np.diag([1.0, 1.0, 0.0]).tolist()})
    sub = write_json(tmp_path / "sub.json", {"dim": 3, "vectors": [[0, 1, 1]]})
    axis = write_json(tmp_path / "axis.json", {"dim": 3, "vectors": [[0, 0, 1]]})

    assert main(["perturb", coords_path(), "--op", identity, "--check", "apply"]) == 0
    assert main(["perturb", coords_path(), "--op", proj, "--check", "apply"]) == 1

    json_out = tmp_path / "rec.json"
    assert main(
        ["perturb", coords_path(), "--op", proj, "--check", "operator1", "--json", str(json_out)]
    ) == 0
    record = json.loads(json_out.read_text())
    assert record["chain_ok"] is True and record["equivalence_ok"] is False

    diag210 = write_json(tmp_path / "diag210.json", {"dim": 3, "rows": np.diag([2.0, 1.0, 0.0]).tolist()})
    assert main(["perturb", coords_path(), "--op", diag210, "--check", f"modulus:{sub}"]) == 0
    # subspace inside the kernel: the angle hypothesis fails, negative verdict
    assert main(["perturb", coords_path(), "--op", proj, "--check", f"modulus:{axis}"]) == 1

    assert main(["perturb", coords_path(), "--op", proj, "--check", f"lemma:{sub}"]) == 0
    assert main(["perturb", coords_path(), "--op", identity, "--check", "per1"]) == 0
    assert main(["perturb", coords_path(), "--op", identity, "--check", "bogus"]) == 2
    capsys.readouterr()


def test_cli_paper_examples(capsys):
    assert main(["paper-examples"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
    assert "8/8 claims pass" in out


def test_cli_random_generators(tmp_path):
    frame_out = tmp_path / "frame.json"
    assert main(["random", "--type", "frame", "--dim", "4", "--count", "3", "--seed", "1", "-o", str(frame_out)]) == 0
    F = load_frame(frame_out)
    assert F.ambient_dim == 4 and len(F) == 3

    riesz_out = tmp_path / "riesz.json"
    assert main(["random", "--type", "riesz", "--dim", "4", "--count", "3", "--seed", "2", "-o", str(riesz_out)]) == 0
    assert main(["riesz", str(riesz_out)]) == 0

    op_out = tmp_path / "op.json"
    assert main(["random", "--type", "operator", "--dim", "4", "--seed", "3", "-o", str(op_out)]) == 0
    T = load_operator(op_out)
    assert T.shape == (4, 4)
    assert np.linalg.cond(T) <= 10.0 + 1e-6

    again = tmp_path / "again.json"
    assert main(["random", "--type", "frame", "--dim", "4", "--count", "3", "--seed", "1", "-o", str(again)]) == 0
    assert frame_out.read_text() == again.read_text()
