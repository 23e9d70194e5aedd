#!/usr/bin/env python3
# Build a few small fusion frames, look at their frame operators and
# optimal bounds, split and reassemble a vector, and compute duals.

import numpy as np

from fusionweave import (
    FusionFrame,
    analysis,
    approx_dual_defect,
    canonical_dual,
    frame_bounds,
    frame_operator,
    is_dual,
    mixed_frame_operator,
    span_of,
    synthesis,
)

np.set_printoptions(precision=4, suppress=True)

# ---------------------------------------------------------------------------
# an orthonormal fusion basis: the three coordinate lines of R^3
coords = FusionFrame.of_subspaces(
    [span_of([[1, 0, 0]]), span_of([[0, 1, 0]]), span_of([[0, 0, 1]])]
)
print("frame operator of the coordinate lines:")
print(frame_operator(coords))
bounds, ok = frame_bounds(coords)
print(f"bounds = ({bounds.lower:.4f}, {bounds.upper:.4f}), fusion frame: {ok}")

f = np.array([1.0, 2.0, 3.0])
parts = analysis(coords, f)
print("analysis of", f, "->", ", ".join(str(p) for p in parts))
print("synthesis of the parts ->", synthesis(coords, parts))

# ---------------------------------------------------------------------------
# a genuinely tilted pair in R^2: span{e1} and span{(e1+e2)/sqrt(2)}
tilted = FusionFrame.of_subspaces([span_of([[1, 0]]), span_of([[1, 1]])])
S = frame_operator(tilted)
print("\ntilted pair frame operator:")
print(S)
bounds, ok = frame_bounds(tilted)
print(f"bounds = ({bounds.lower:.5f}, {bounds.upper:.5f})   (1 -/+ sqrt(2)/2)")

# the canonical dual tilts the other way
dual = canonical_dual(tilted)
print("canonical dual directions:")
for k, V in enumerate(dual.subspaces):
    print(f"  member {k}: {V.basis[:, 0]}")
print("mixed operator with the canonical dual (identity expected):")
print(mixed_frame_operator(tilted, dual))
print("is_dual:", is_dual(tilted, dual))

# ---------------------------------------------------------------------------
# an approximate dual: perturb the second dual subspace a little
approx = FusionFrame.of_subspaces(
    [dual.subspaces[0], span_of([[0.15, 1.0]])], weights=[1.0, 1.0]
)
defect = approx_dual_defect(tilted, approx)
print(f"\nperturbed dual defect ||I - psi|| = {defect:.5f}")
print("approximate dual (defect < 1):", defect < 1.0)
print("exact dual:", is_dual(tilted, approx))
