"""Closed subspaces of R^n as first-class values.

A :class:`Subspace` stores an orthonormal basis matrix; the zero subspace
(zero columns) is a legal value with projector 0.  All operations are
pure and return new values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    operator_norm,
    orthonormal_columns,
)

__all__ = [
    "Subspace",
    "span_of",
    "projector",
    "contains",
    "intersect",
    "subspace_sum",
    "ortho_complement",
    "friedrichs_cos",
    "apply_operator",
    "null_space",
    "range_space",
]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of R^n given by an n-by-k orthonormal basis matrix."""

    ambient_dim: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        B = as_matrix(self.basis, "basis")
        object.__setattr__(self, "basis", B)
        n, k = B.shape
        if n != self.ambient_dim:
            raise DimensionMismatch(
                f"basis has {n} rows but ambient dimension is {self.ambient_dim}"
            )
        if k > n:
            raise DimensionMismatch(f"basis has {k} columns in dimension {n}")
        if k and operator_norm(B.T @ B - np.eye(k)) > 1e-8:
            raise ValueError("basis columns are not orthonormal")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.zeros((ambient_dim, 0)))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, np.eye(ambient_dim))


def span_of(vectors, tol: Tolerance = DEFAULT_TOL, ambient_dim: int | None = None) -> Subspace:
    """Subspace spanned by a list of vectors.

    ``ambient_dim`` is only needed for an empty list, where the span is
    the zero subspace of that dimension.
    """
    vecs = [np.asarray(v, dtype=float).ravel() for v in vectors]
    if not vecs:
        if ambient_dim is None:
            raise DimensionMismatch("empty span needs an explicit ambient_dim")
        return Subspace.zero(ambient_dim)
    n = vecs[0].size
    if any(v.size != n for v in vecs):
        raise DimensionMismatch("vectors have unequal lengths")
    if ambient_dim is not None and ambient_dim != n:
        raise DimensionMismatch(f"vectors of length {n} in ambient dimension {ambient_dim}")
    A = np.column_stack(vecs)
    return Subspace(n, orthonormal_columns(A, tol))


def projector(V: Subspace) -> np.ndarray:
    """Orthogonal projector onto ``V`` (symmetric, idempotent, trace = dim)."""
    return V.basis @ V.basis.T


def _same_ambient(*subs: Subspace):
    dims = {V.ambient_dim for V in subs}
    if len(dims) > 1:
        raise DimensionMismatch(f"ambient dimensions differ: {sorted(dims)}")


def contains(V: Subspace, W: Subspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff W is a subset of V, i.e. ``||(I - P_V) B_W|| <= orth_tol``."""
    _same_ambient(V, W)
    if W.is_zero:
        return True
    residual = W.basis - V.basis @ (V.basis.T @ W.basis)
    return operator_norm(residual) <= tol.orth_tol


def intersect(M: Subspace, N: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Intersection via the null space of the stacked complement projectors.

    A vector lies in both subspaces exactly when both residuals
    ``(I - P_M) x`` and ``(I - P_N) x`` vanish.  The stacked matrix has
    operator norm at most 2, so the rank threshold is floored at scale 1;
    rank is decided strictly above the threshold, which resolves ties
    toward the smaller intersection.
    """
    _same_ambient(M, N)
    n = M.ambient_dim
    if n == 0:
        return Subspace.zero(0)
    K = np.vstack([np.eye(n) - projector(M), np.eye(n) - projector(N)])
    _, s, Vt = np.linalg.svd(K)
    cutoff = tol.rank_tol * max(float(s[0]) if s.size else 0.0, 1.0)
    rank = int(np.sum(s > cutoff))
    return Subspace(n, Vt[rank:].T)


def subspace_sum(M: Subspace, N: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Span of the union, from the concatenated bases."""
    _same_ambient(M, N)
    stacked = np.hstack([M.basis, N.basis])
    return Subspace(M.ambient_dim, orthonormal_columns(stacked, tol))


def ortho_complement(M: Subspace) -> Subspace:
    """Orthogonal complement, via full orthonormal extension of the basis."""
    n, k = M.basis.shape
    if k == 0:
        return Subspace.full(n)
    U, _, _ = np.linalg.svd(M.basis, full_matrices=True)
    return Subspace(n, U[:, k:])


def _reduce_away(M: Subspace, J: Subspace, tol: Tolerance) -> Subspace:
    """M with the subspace J (a subset of M) projected out, i.e. M minus J.

    The result has dimension exactly ``dim M - dim J``; taking that many
    leading singular directions avoids spurious rank from a numerically
    zero residual when M equals J.
    """
    keep = M.dim - J.dim
    if keep <= 0:
        return Subspace.zero(M.ambient_dim)
    if J.is_zero:
        return M
    residual = M.basis - J.basis @ (J.basis.T @ M.basis)
    U, _, _ = np.linalg.svd(residual, full_matrices=False)
    return Subspace(M.ambient_dim, U[:, :keep])


def friedrichs_cos(M: Subspace, N: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Cosine of the Friedrichs angle between two subspaces.

    The common intersection is removed from both sides first; the cosine
    is the operator norm of the product of the reduced projectors.  By
    convention the value is 0 when either reduced subspace is trivial
    (supremum over an empty set of unit vectors).
    """
    _same_ambient(M, N)
    J = intersect(M, N, tol)
    M_red = _reduce_away(M, J, tol)
    N_red = _reduce_away(N, J, tol)
    if M_red.is_zero or N_red.is_zero:
        return 0.0
    c = operator_norm(M_red.basis.T @ N_red.basis)
    return float(min(max(c, 0.0), 1.0))


def apply_operator(T, V: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Image subspace T(V); the dimension may drop, possibly to zero."""
    A = as_matrix(T, "operator")
    if A.shape[1] != V.ambient_dim:
        raise DimensionMismatch(
            f"operator has {A.shape[1]} columns but subspace lives in R^{V.ambient_dim}"
        )
    if V.is_zero:
        return Subspace.zero(A.shape[0])
    return Subspace(A.shape[0], orthonormal_columns(A @ V.basis, tol))


def null_space(T, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Kernel of an operator, as a subspace of its domain."""
    A = as_matrix(T, "operator")
    n = A.shape[1]
    if A.size == 0:
        return Subspace.full(n)
    _, s, Vt = np.linalg.svd(A)
    rank = int(np.sum(s > tol.rank_tol * s[0])) if s.size and s[0] > 0.0 else 0
    return Subspace(n, Vt[rank:].T)


def range_space(T, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Column span of an operator, as a subspace of its codomain."""
    A = as_matrix(T, "operator")
    return Subspace(A.shape[0], orthonormal_columns(A, tol))
