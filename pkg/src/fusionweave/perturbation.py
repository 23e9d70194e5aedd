"""Operator-perturbation checks for fusion frames: the projection
commutation identity, the reduced-modulus sandwich through the angle with
the kernel, the pseudoinverse-image equivalence record, partial frame
operators, and the three sufficient weaving conditions for an invertible
perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import (
    AngleNotLessThanOne,
    DimensionMismatch,
    IndexOutOfRange,
    NotUnitary,
    SingularOperator,
    ZeroOperator,
)
from .frames import (
    FrameBounds,
    FusionFrame,
    frame_bounds,
    frame_bounds_on_span,
    transform_frame,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    numerical_rank,
    operator_norm,
    pinv,
    reduced_min_modulus,
)
from .subspaces import (
    Subspace,
    apply_operator,
    contains,
    friedrichs_cos,
    null_space,
    projector,
    range_space,
)
from .weaving import ENUM_CAP, weaving_report

__all__ = [
    "ModulusSandwich",
    "Operator1Record",
    "Per1Verdict",
    "partial_frame_operator",
    "lemma_commute_residual",
    "modulus_sandwich",
    "operator1_check",
    "per1_conditions",
]


def partial_frame_operator(F: FusionFrame, sigma: Iterable[int]) -> np.ndarray:
    """Frame operator restricted to a subset of indices (1-based)."""
    indices = sorted(set(int(i) for i in sigma))
    if any(i < 1 or i > len(F) for i in indices):
        raise IndexOutOfRange(f"indices must lie in 1..{len(F)}: {indices}")
    S = np.zeros((F.ambient_dim, F.ambient_dim))
    for i in indices:
        m = F.members[i - 1]
        S += m.weight**2 * projector(m.subspace)
    return S


def lemma_commute_residual(T, V: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Residual of the identity P_V T^t = P_V T^t P_{TV}; zero in theory."""
    A = as_matrix(T, "operator")
    if A.shape[1] != V.ambient_dim or A.shape[0] != V.ambient_dim:
        raise DimensionMismatch("operator and subspace dimensions do not match")
    P_V = projector(V)
    P_image = projector(apply_operator(A, V, tol))
    left = P_V @ A.T
    return operator_norm(left - left @ P_image)


@dataclass(frozen=True)
class ModulusSandwich:
    """Two-sided estimate of gamma(T P_V) through the kernel angle."""

    c: float
    lhs: float
    mid: float
    rhs: float
    holds: bool


def modulus_sandwich(T, V: Subspace, tol: Tolerance = DEFAULT_TOL) -> ModulusSandwich:
    """Check gamma(T)(1-c^2)^(1/2) <= gamma(T P_V) <= ||T||(1-c^2)^(1/2).

    ``c`` is the Friedrichs-angle cosine between the kernel of T and V.
    When V sits inside the kernel the compressed operator vanishes and the
    estimate is vacuous; that configuration is treated as c = 1 and
    rejected, matching the c < 1 hypothesis.
    """
    A = as_matrix(T, "operator")
    if A.shape[1] != V.ambient_dim:
        raise DimensionMismatch("operator and subspace dimensions do not match")
    kernel = null_space(A, tol)
    if contains(kernel, V, tol):
        c = 1.0
    else:
        c = friedrichs_cos(kernel, V, tol)
    if c >= 1.0 - tol.rank_tol:
        raise AngleNotLessThanOne(f"angle cosine {c} is not below 1")
    gamma = reduced_min_modulus(A, tol)
    slack = float(np.sqrt(1.0 - c * c))
    lhs = gamma * slack
    mid = reduced_min_modulus(A @ projector(V), tol)
    rhs = operator_norm(A) * slack
    return ModulusSandwich(c, lhs, mid, rhs, lhs - 1e-9 <= mid <= rhs + 1e-9)


@dataclass(frozen=True)
class Operator1Record:
    """Bounds of the pseudoinverse-image and image families of one frame.

    ``chain_ok`` reports the two-sided norm inequality linking the two
    families; ``equivalence_ok`` reports whether frame-ness of the left
    family on the operator's row space coincides with frame-ness of the
    right family on the whole space.  The equivalence is recorded, not
    asserted: degenerate non-injective configurations can break it.
    """

    left_bounds: FrameBounds
    right_bounds: FrameBounds
    gamma: float
    chain_ok: bool
    equivalence_ok: bool
    left_is_frame: bool
    right_is_frame: bool


def operator1_check(
    T,
    F: FusionFrame,
    tol: Tolerance = DEFAULT_TOL,
    trials: int = 100,
    seed: int = 0,
) -> Operator1Record:
    """Compare {(T^+T W_i, w_i)} on the row space with {(T W_i, w_i)} on H."""
    A = as_matrix(T, "operator")
    if A.shape[0] != A.shape[1] or A.shape[1] != F.ambient_dim:
        raise DimensionMismatch("operator must be square with the frame's dimension")
    gamma = reduced_min_modulus(A, tol)
    if gamma <= tol.frame_eps:
        raise ZeroOperator("operator is numerically zero")
    n = F.ambient_dim
    row_projector = pinv(A, tol) @ A
    left = transform_frame(row_projector, F, tol)
    row_space = range_space(A.T, tol)
    left_bounds = frame_bounds_on_span(left, tol, within=row_space)
    left_is_frame = left_bounds.lower > tol.frame_eps
    right = transform_frame(A, F, tol)
    right_bounds, right_is_frame = frame_bounds(right, tol)

    # proof chain: gamma^2 * sum_i w^2 ||P_{TW_i} f||^2 <= sum_i w^2 ||P_{T+TW_i} T^t f||^2
    #              <= ||T||^2 * sum_i w^2 ||P_{TW_i} f||^2, for arbitrary f
    rng = np.random.default_rng(seed)
    fs = rng.standard_normal((n, trials))
    norm_T = operator_norm(A)
    base = np.zeros(trials)
    middle = np.zeros(trials)
    At_fs = A.T @ fs
    for m, left_m, right_m in zip(F.members, left.members, right.members):
        w2 = m.weight**2
        base += w2 * np.sum((right_m.subspace.basis.T @ fs) ** 2, axis=0)
        middle += w2 * np.sum((left_m.subspace.basis.T @ At_fs) ** 2, axis=0)
    slack = 1e-9 * np.maximum(1.0, norm_T**2 * base)
    chain_ok = bool(
        np.all(gamma**2 * base <= middle + slack) and np.all(middle <= norm_T**2 * base + slack)
    )
    return Operator1Record(
        left_bounds=left_bounds,
        right_bounds=right_bounds,
        gamma=gamma,
        chain_ok=chain_ok,
        equivalence_ok=left_is_frame == right_is_frame,
        left_is_frame=left_is_frame,
        right_is_frame=right_is_frame,
    )


@dataclass(frozen=True)
class Per1Verdict:
    """Sufficient-condition verdicts for weaving a frame with its image.

    ``woven_verdict`` is always computed independently by exhaustive
    weaving enumeration, never inferred from the conditions.
    ``cond_iii`` is None when the operator is not unitary.
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool | None
    woven_verdict: bool
    witnesses: dict = field(repr=False)


def per1_conditions(
    T,
    F: FusionFrame,
    tol: Tolerance = DEFAULT_TOL,
    require_unitary: bool = False,
    subset_cap: int = ENUM_CAP,
    seed: int = 0,
) -> Per1Verdict:
    """Evaluate the three invertible-perturbation weaving conditions.

    (i) one inclusion direction between W_i and T W_i holding uniformly
    across all indices (the per-index pattern lands in the witnesses);
    (ii) W_i inside T^t T W_i for all i together with ||I - T^-1|| below
    the frame-bound ratio; (iii) for unitary T, positive semidefinite
    symmetrized commutators of T with every partial frame operator.
    """
    A = as_matrix(T, "operator")
    n = F.ambient_dim
    if A.shape != (n, n):
        raise DimensionMismatch("operator must be square with the frame's dimension")
    if numerical_rank(A, tol) < n or reduced_min_modulus(A, tol) <= tol.frame_eps:
        raise SingularOperator("operator is numerically singular")
    A_inv = np.linalg.inv(A)
    moved = transform_frame(A, F, tol)

    pattern = [
        (contains(TW, W, tol), contains(W, TW, tol))
        for W, TW in zip(F.subspaces, moved.subspaces)
    ]
    cond_i = all(p[0] for p in pattern) or all(p[1] for p in pattern)

    AtA = A.T @ A
    grown = transform_frame(AtA, F, tol)
    inclusions_ii = [contains(G, W, tol) for W, G in zip(F.subspaces, grown.subspaces)]
    bounds, _ = frame_bounds(F, tol)
    ratio = bounds.lower / bounds.upper if bounds.upper > 0.0 else 0.0
    norm_defect = operator_norm(np.eye(n) - A_inv)
    cond_ii = all(inclusions_ii) and norm_defect < ratio

    unitary = operator_norm(AtA - np.eye(n)) <= tol.orth_tol
    if require_unitary and not unitary:
        raise NotUnitary("condition (iii) needs a unitary operator")
    cond_iii: bool | None = None
    worst_sigma: tuple[int, ...] = ()
    worst_eig: float | None = None
    iii_exhaustive = True
    if unitary:
        length = len(F)
        if 2**length <= subset_cap:
            masks = range(2**length)
        else:
            iii_exhaustive = False
            rng = np.random.default_rng(seed)
            masks = rng.integers(0, 2**length, size=subset_cap, dtype=np.int64)
        cond_iii = True
        for mask in masks:
            sigma = tuple(i + 1 for i in range(len(F)) if int(mask) >> i & 1)
            S_sigma = partial_frame_operator(F, sigma)
            comm = A @ S_sigma - S_sigma @ A
            sym = 0.5 * (comm + comm.T)
            lam = float(np.linalg.eigvalsh(sym)[0])
            if worst_eig is None or lam < worst_eig:
                worst_eig, worst_sigma = lam, sigma
            if lam < -tol.frame_eps:
                cond_iii = False

    report = weaving_report([F, moved], tol)
    witnesses = {
        "inclusion_pattern": pattern,
        "inclusions_ii": inclusions_ii,
        "norm_identity_minus_inverse": norm_defect,
        "bound_ratio": ratio,
        "unitary": unitary,
        "worst_sigma": worst_sigma,
        "worst_commutator_min_eig": worst_eig,
        "iii_exhaustive": iii_exhaustive,
        "weaving_report": report,
    }
    return Per1Verdict(
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        woven_verdict=report.woven,
        witnesses=witnesses,
    )
