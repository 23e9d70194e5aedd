"""Executable claim ledger for the two bundled 3-D configurations.

Every claim about the bundled documents is checked numerically here and
reported with a stable identifier, so regressions in any module surface
as a failed claim.  The bundled configurations are:

* coordinate spans of R^3 against the same family with its first line
  enlarged to the xy-plane (a frame that is not a Riesz fusion basis);
* the xy-plane-plus-z-axis Riesz basis against an approximate dual whose
  second subspace is tilted.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .documents import frame_from_dict, operator_from_dict, _read_json
from .frames import (
    FusionFrame,
    approx_dual_defect,
    frame_bounds,
    is_dual,
    is_riesz_basis,
    mixed_frame_operator,
    transform_frame,
)
from .linalg import DEFAULT_TOL, Tolerance
from .weaving import weaving_report

__all__ = ["Claim", "builtin_path", "load_builtin_frame", "load_builtin_operator", "run_claims"]

FRAME_DOCS = {
    "coordinate_spans_3d",
    "coordinate_spans_enlarged",
    "plane_axis_pair",
    "plane_tilted_pair",
}


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    passed: bool
    detail: str


def builtin_path(name: str):
    """Filesystem path of a bundled JSON document."""
    return resources.files("fusionweave").joinpath("data", f"{name}.json")


def load_builtin_frame(name: str, tol: Tolerance = DEFAULT_TOL) -> FusionFrame:
    data = _read_json(builtin_path(name))
    return frame_from_dict(data, tol, where=name)


def load_builtin_operator(name: str) -> np.ndarray:
    return operator_from_dict(_read_json(builtin_path(name)), where=name)


def run_claims(tol: Tolerance = DEFAULT_TOL) -> list[Claim]:
    """Check every bundled-configuration claim; order is stable."""
    claims: list[Claim] = []

    def add(claim_id, description, passed, detail=""):
        claims.append(Claim(claim_id, description, bool(passed), detail))

    coords = load_builtin_frame("coordinate_spans_3d", tol)
    enlarged = load_builtin_frame("coordinate_spans_enlarged", tol)

    report = weaving_report([coords, enlarged], tol)
    add(
        "woven-coordinate-pair",
        "all 8 weavings of the coordinate/enlarged pair are fusion frames",
        report.woven and report.enumerated == 8,
        f"enumerated={report.enumerated}",
    )
    add(
        "universal-bounds-1-2",
        "universal bounds of the pair are (1, 2)",
        abs(report.universal_lower - 1.0) <= 1e-10 and abs(report.universal_upper - 2.0) <= 1e-10,
        f"C={report.universal_lower:.12g} D={report.universal_upper:.12g}",
    )

    bounds, is_frame = frame_bounds(enlarged, tol)
    add(
        "enlarged-family-is-frame",
        "the enlarged family is still a fusion frame",
        is_frame,
        f"bounds=({bounds.lower:.12g}, {bounds.upper:.12g})",
    )

    e2 = np.array([0.0, 1.0, 0.0])
    f1, f2 = e2, -e2
    in_members = (
        np.linalg.norm(f1 - enlarged.subspaces[0].basis @ (enlarged.subspaces[0].basis.T @ f1))
        <= 1e-12
        and np.linalg.norm(f2 - enlarged.subspaces[1].basis @ (enlarged.subspaces[1].basis.T @ f2))
        <= 1e-12
    )
    sum_sq = float(np.linalg.norm(f1 + f2) ** 2)
    coeff_sq = float(np.linalg.norm(f1) ** 2 + np.linalg.norm(f2) ** 2)
    add(
        "enlarged-family-not-riesz",
        "the enlarged family is not a Riesz fusion basis; the duplicated "
        "direction gives a vanishing sum of nonzero parts",
        (not is_riesz_basis(enlarged, tol)) and in_members and sum_sq <= 1e-20 and coeff_sq == 2.0,
        f"|f1+f2|^2={sum_sq:.3g}, |f1|^2+|f2|^2={coeff_sq:.3g}",
    )

    plane_axis = load_builtin_frame("plane_axis_pair", tol)
    tilted = load_builtin_frame("plane_tilted_pair", tol)
    psi = mixed_frame_operator(plane_axis, tilted, tol)
    psi_expected = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.4], [0.0, 0.0, 0.8]])
    add(
        "mixed-operator-matrix",
        "mixed reconstruction operator of the plane/tilted pair",
        np.max(np.abs(psi - psi_expected)) <= 1e-10,
        f"max entry error {np.max(np.abs(psi - psi_expected)):.3e}",
    )

    defect = approx_dual_defect(plane_axis, tilted, tol)
    add(
        "defect-value",
        "defect ||I - psi|| equals sqrt(5)/5; approximate dual but not a dual",
        abs(defect - np.sqrt(5.0) / 5.0) <= 1e-10
        and defect < 1.0
        and not is_dual(plane_axis, tilted, tol),
        f"defect={defect:.12g}",
    )

    displayed = load_builtin_operator("displayed_inverse")
    psi_inv = np.linalg.inv(psi)
    add(
        "inverse-transpose-convention",
        "inv(psi) matches the bundled displayed matrix up to transposition",
        np.max(np.abs(psi_inv - displayed.T)) <= 1e-10,
        f"max entry error {np.max(np.abs(psi_inv - displayed.T)):.3e}",
    )

    moved = transform_frame(psi_inv, tilted, tol)
    inv_report = weaving_report([plane_axis, moved], tol)
    add(
        "woven-with-inverse-image",
        "the pair stays woven after pushing the dual through inv(psi)",
        inv_report.woven and inv_report.enumerated == 4,
        f"C={inv_report.universal_lower:.12g} D={inv_report.universal_upper:.12g}",
    )
    return claims
