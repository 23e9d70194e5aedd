"""Weaving of fusion frame families: assignment enumeration, per-weaving
bound reports with universal constants, Riesz weaving checks, and the
biorthogonal Riesz construction.

An assignment maps every index to the label (1..M) of the frame that
serves it; a partition block sigma_j is the preimage of label j and may
be empty.  Exhaustive enumeration is capped; beyond the cap a seeded
uniform sample is drawn and the report is marked as sampled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    LengthMismatch,
    NonUniformWeights,
    NotOrthonormalBasis,
    SingularOperator,
)
from .frames import (
    FrameBounds,
    FusionFrame,
    is_orthonormal_fusion_basis,
    riesz_sequence_bounds,
    transform_frame,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    numerical_rank,
    operator_norm,
    reduced_min_modulus,
    sym_eig_extremes,
)
from .subspaces import Subspace, apply_operator

__all__ = [
    "ENUM_CAP",
    "Assignment",
    "WeavingEntry",
    "WeavingReport",
    "RieszWeavingEntry",
    "RieszWeavingReport",
    "TransformEnvelope",
    "assignments",
    "weave",
    "weaving_report",
    "is_weakly_woven",
    "riesz_weaving_report",
    "construct_biorthogonal_riesz",
    "transform_frames",
]

ENUM_CAP = 1 << 20


@dataclass(frozen=True)
class Assignment:
    """Index-to-frame label map; labels are 1-based, one per index."""

    labels: tuple[int, ...]
    frame_count: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))
        if any(not (1 <= v <= self.frame_count) for v in self.labels):
            raise ValueError(f"labels must lie in 1..{self.frame_count}: {self.labels}")

    def blocks(self) -> list[tuple[int, ...]]:
        """Partition blocks as 1-based index tuples, one per label."""
        return [
            tuple(i + 1 for i, v in enumerate(self.labels) if v == j)
            for j in range(1, self.frame_count + 1)
        ]


@dataclass(frozen=True)
class WeavingEntry:
    assignment: Assignment
    bounds: FrameBounds
    is_frame: bool


@dataclass(frozen=True)
class WeavingReport:
    """Per-weaving verdicts plus the universal constants over them."""

    per_assignment: tuple[WeavingEntry, ...]
    universal_lower: float
    universal_upper: float
    woven: bool
    enumerated: int
    sampled: bool


def assignments(
    index_count: int, frame_count: int, enum_cap: int = ENUM_CAP
) -> list[Assignment]:
    """All frame_count**index_count assignments in lexicographic order."""
    if index_count < 1 or frame_count < 1:
        raise ValueError("index_count and frame_count must be at least 1")
    total = frame_count**index_count
    if total > enum_cap:
        raise EnumerationTooLarge(
            f"{frame_count}^{index_count} = {total} assignments exceed cap {enum_cap}"
        )
    return [
        Assignment(labels, frame_count)
        for labels in itertools.product(range(1, frame_count + 1), repeat=index_count)
    ]


def _check_frames(frames: Sequence[FusionFrame]) -> tuple[int, int]:
    if len(frames) < 1:
        raise LengthMismatch("need at least one frame")
    n = frames[0].ambient_dim
    length = len(frames[0])
    for F in frames:
        if F.ambient_dim != n:
            raise DimensionMismatch("frames live in different ambient spaces")
        if len(F) != length:
            raise LengthMismatch("frames have different index-set sizes")
    return n, length


def weave(frames: Sequence[FusionFrame], a: Assignment) -> FusionFrame:
    """The mixture whose member i comes from the frame labeled a.labels[i].

    The weight travels with the chosen subspace.
    """
    n, length = _check_frames(frames)
    if len(a.labels) != length or a.frame_count != len(frames):
        raise LengthMismatch(
            f"assignment for {len(a.labels)} indices over {a.frame_count} frames, "
            f"expected {length} indices over {len(frames)} frames"
        )
    members = tuple(frames[label - 1].members[i] for i, label in enumerate(a.labels))
    return FusionFrame(n, members)


def _weighted_projectors(frames: Sequence[FusionFrame]) -> list[list[np.ndarray]]:
    stacks = []
    for F in frames:
        stacks.append([m.weight**2 * m.subspace.basis @ m.subspace.basis.T for m in F.members])
    return stacks


def _report_entries(frames, assigns, tol) -> list[WeavingEntry]:
    n, _ = _check_frames(frames)
    wproj = _weighted_projectors(frames)
    entries = []
    for a in assigns:
        S = np.zeros((n, n))
        for i, label in enumerate(a.labels):
            S += wproj[label - 1][i]
        lo, hi = sym_eig_extremes(S, tol)
        bounds = FrameBounds(max(lo, 0.0), max(hi, 0.0))
        entries.append(WeavingEntry(a, bounds, bounds.lower > tol.frame_eps))
    return entries


def weaving_report(
    frames: Sequence[FusionFrame],
    tol: Tolerance = DEFAULT_TOL,
    sample_count: int | None = None,
    seed: int = 0,
    enum_cap: int = ENUM_CAP,
) -> WeavingReport:
    """Evaluate the frame bounds of every weaving (or a seeded sample).

    In exhaustive mode the universal constants are exact minima/maxima; in
    sampled mode they are one-sided estimates and the report says so via
    ``sampled``.  Entries are aggregated in lexicographic assignment order
    either way, so the output is deterministic for fixed inputs and seed.
    """
    n, length = _check_frames(frames)
    M = len(frames)
    if sample_count is None:
        assigns = assignments(length, M, enum_cap)
        sampled = False
    else:
        if sample_count < 1:
            raise ValueError("sample_count must be positive")
        rng = np.random.default_rng(seed)
        drawn = rng.integers(1, M + 1, size=(sample_count, length))
        assigns = [Assignment(tuple(row), M) for row in sorted(map(tuple, drawn))]
        sampled = True
    entries = _report_entries(frames, assigns, tol)
    lower = min(e.bounds.lower for e in entries)
    upper = max(e.bounds.upper for e in entries)
    return WeavingReport(
        per_assignment=tuple(entries),
        universal_lower=lower,
        universal_upper=upper,
        woven=all(e.is_frame for e in entries),
        enumerated=len(entries),
        sampled=sampled,
    )


def is_weakly_woven(
    frames: Sequence[FusionFrame], tol: Tolerance = DEFAULT_TOL, enum_cap: int = ENUM_CAP
) -> bool:
    """True iff every weaving is a fusion frame.

    At finite scale this coincides with the existence of universal bounds,
    so the value always equals ``weaving_report(...).woven`` in exhaustive
    mode.
    """
    return weaving_report(frames, tol, enum_cap=enum_cap).woven


@dataclass(frozen=True)
class RieszWeavingEntry:
    subset: tuple[int, ...]  # 1-based indices served by the first frame
    bounds: FrameBounds
    is_riesz_sequence: bool
    rank: int
    is_riesz_basis: bool


@dataclass(frozen=True)
class RieszWeavingReport:
    per_subset: tuple[RieszWeavingEntry, ...]
    all_riesz_sequences: bool
    all_riesz_bases: bool
    universal_lower: float
    universal_upper: float


def riesz_weaving_report(
    W: FusionFrame, V: FusionFrame, tol: Tolerance = DEFAULT_TOL, enum_cap: int = ENUM_CAP
) -> RieszWeavingReport:
    """Riesz-sequence bounds of every two-sided weaving of 1-uniform frames.

    For each subset sigma the family takes W on sigma and V on the
    complement; the verdicts record whether every weaving is a Riesz
    sequence and whether every weaving is additionally complete.
    """
    if not W.is_uniform or not V.is_uniform:
        raise NonUniformWeights("Riesz weaving is defined for weight-1 families")
    n, length = _check_frames([W, V])
    if 2**length > enum_cap:
        raise EnumerationTooLarge(f"2^{length} subsets exceed cap {enum_cap}")
    entries = []
    for mask in range(2**length):
        subset = tuple(i + 1 for i in range(length) if mask >> i & 1)
        family = [
            W.subspaces[i] if (mask >> i & 1) else V.subspaces[i] for i in range(length)
        ]
        bounds, is_seq = riesz_sequence_bounds(family, tol)
        rank = numerical_rank(np.hstack([S.basis for S in family]), tol)
        entries.append(RieszWeavingEntry(subset, bounds, is_seq, rank, is_seq and rank == n))
    return RieszWeavingReport(
        per_subset=tuple(entries),
        all_riesz_sequences=all(e.is_riesz_sequence for e in entries),
        all_riesz_bases=all(e.is_riesz_basis for e in entries),
        universal_lower=min(e.bounds.lower for e in entries),
        universal_upper=max(e.bounds.upper for e in entries),
    )


def construct_biorthogonal_riesz(
    U, basis_subspaces: Sequence[Subspace], tol: Tolerance = DEFAULT_TOL
) -> tuple[FusionFrame, FusionFrame]:
    """Riesz fusion basis pair (U N_i, (U^-1)^T N_i) with cross-orthogonality.

    Starting from an orthonormal fusion basis N, the two images satisfy
    W_i perpendicular to V_j for i != j, and every weaving of the pair is
    a fusion Riesz basis.
    """
    A = as_matrix(U, "operator")
    if A.shape[0] != A.shape[1]:
        raise SingularOperator("operator must be square")
    if reduced_min_modulus(A, tol) <= tol.frame_eps or numerical_rank(A, tol) < A.shape[0]:
        raise SingularOperator("operator is numerically singular")
    N = FusionFrame.of_subspaces(basis_subspaces)
    if N.ambient_dim != A.shape[0]:
        raise DimensionMismatch("operator and subspaces have different dimensions")
    if not is_orthonormal_fusion_basis(N, tol):
        raise NotOrthonormalBasis("subspaces are not an orthonormal fusion basis")
    A_inv_t = np.linalg.inv(A).T
    W = FusionFrame.of_subspaces([apply_operator(A, S, tol) for S in N.subspaces])
    V = FusionFrame.of_subspaces([apply_operator(A_inv_t, S, tol) for S in N.subspaces])
    return W, V


@dataclass(frozen=True)
class TransformEnvelope:
    """Universal bounds before/after an invertible transform, with the
    condition-number envelope verdicts."""

    original: FrameBounds
    transformed: FrameBounds
    kappa: float  # ||T||^2 ||T^-1||^2
    lower_ok: bool
    upper_ok: bool


def transform_frames(
    T,
    frames: Sequence[FusionFrame],
    tol: Tolerance = DEFAULT_TOL,
    enum_cap: int = ENUM_CAP,
) -> tuple[tuple[FusionFrame, ...], TransformEnvelope]:
    """Apply an invertible operator to every subspace of every frame.

    The returned record compares the universal weaving bounds before and
    after against the envelope C/kappa <= C' and D' <= D*kappa, with
    kappa the squared condition number of the transform.
    """
    A = as_matrix(T, "operator")
    if A.shape[0] != A.shape[1]:
        raise SingularOperator("operator must be square")
    if reduced_min_modulus(A, tol) <= tol.frame_eps or numerical_rank(A, tol) < A.shape[0]:
        raise SingularOperator("operator is numerically singular")
    before = weaving_report(frames, tol, enum_cap=enum_cap)
    moved = tuple(transform_frame(A, F, tol) for F in frames)
    after = weaving_report(moved, tol, enum_cap=enum_cap)
    kappa = operator_norm(A) ** 2 * operator_norm(np.linalg.inv(A)) ** 2
    record = TransformEnvelope(
        original=FrameBounds(before.universal_lower, before.universal_upper),
        transformed=FrameBounds(after.universal_lower, after.universal_upper),
        kappa=kappa,
        lower_ok=after.universal_lower >= before.universal_lower / kappa - 1e-9,
        upper_ok=after.universal_upper <= before.universal_upper * kappa + 1e-9,
    )
    return moved, record
