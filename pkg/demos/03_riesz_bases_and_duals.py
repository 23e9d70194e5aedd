#!/usr/bin/env python3
# Riesz structure: sequence bounds from concatenated orthonormal bases,
# the biorthogonal companion basis of a Riesz fusion basis, and the fact
# that enlarged canonical duals stay woven with the original basis.

import numpy as np

from fusionweave import (
    FusionFrame,
    construct_biorthogonal_riesz,
    enlarge_canonical_dual,
    is_riesz_basis,
    operator_norm,
    projector,
    riesz_sequence_bounds,
    riesz_weaving_report,
    span_of,
    weaving_report,
)
from fusionweave.generators import random_riesz_fusion_basis

np.set_printoptions(precision=4, suppress=True)

# ---------------------------------------------------------------------------
# Riesz sequence bounds: duplicated directions push the lower bound to 0
coords = [span_of([[1, 0, 0]]), span_of([[0, 1, 0]]), span_of([[0, 0, 1]])]
enlarged = [span_of([[1, 0, 0], [0, 1, 0]]), span_of([[0, 1, 0]]), span_of([[0, 0, 1]])]

b, ok = riesz_sequence_bounds(coords)
print(f"coordinate lines: bounds ({b.lower:.4f}, {b.upper:.4f}), Riesz sequence: {ok}")
b, ok = riesz_sequence_bounds(enlarged)
print(f"enlarged family:  bounds ({b.lower:.4f}, {b.upper:.4f}), Riesz sequence: {ok}")
print("  (e2 appears twice, so opposite coefficients sum to zero)")

# still a fusion frame, woven with the coordinate lines, but not Riesz:
pair = weaving_report([FusionFrame.of_subspaces(coords), FusionFrame.of_subspaces(enlarged)])
print(f"woven with the coordinate lines: {pair.woven}")
print(f"Riesz fusion basis: {is_riesz_basis(FusionFrame.of_subspaces(enlarged))}")

# ---------------------------------------------------------------------------
# biorthogonal companion: W_i = U N_i and V_i = (U^-1)^T N_i satisfy
# W_i  ⟂  V_j for i != j, and every weaving is a Riesz basis
U = np.array([[1.0, 1.0], [0.0, 1.0]])
N = [span_of([[1, 0]]), span_of([[0, 1]])]
W, V = construct_biorthogonal_riesz(U, N)
print("\nshear image basis directions:", ", ".join(str(S.basis[:, 0]) for S in W.subspaces))
print("companion basis directions:  ", ", ".join(str(S.basis[:, 0]) for S in V.subspaces))
cross = operator_norm(projector(W.subspaces[0]) @ projector(V.subspaces[1]))
print(f"cross projector norm (i=1, j=2): {cross:.2e}")
rep = riesz_weaving_report(W, V)
print(f"every weaving a Riesz sequence: {rep.all_riesz_sequences}")
print(f"every weaving a Riesz basis:    {rep.all_riesz_bases}")

# ---------------------------------------------------------------------------
# duals of a Riesz fusion basis are woven with it, even after enlarging
# the canonical dual subspaces by arbitrary extra directions
rng = np.random.default_rng(7)
F, _, _ = random_riesz_fusion_basis(rng, n=4, count=3, cond_cap=5.0)
extras = [[rng.standard_normal(4)], [], [rng.standard_normal(4)]]
dual = enlarge_canonical_dual(F, extras)
print("\nrandom Riesz basis member dims:", [S.dim for S in F.subspaces])
print("enlarged dual member dims:     ", [S.dim for S in dual.subspaces])
print("woven with the enlarged dual:  ", weaving_report([F, dual]).woven)
