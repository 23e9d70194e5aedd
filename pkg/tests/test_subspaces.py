import numpy as np
import pytest

from fusionweave import (
    DimensionMismatch,
    Subspace,
    apply_operator,
    contains,
    friedrichs_cos,
    intersect,
    null_space,
    ortho_complement,
    projector,
    range_space,
    span_of,
    subspace_sum,
)


def e(i, n=3):
    v = np.zeros(n)
    v[i] = 1.0
    return v


def random_subspace(rng, n, dim):
    if dim == 0:
        return Subspace.zero(n)
    from fusionweave import orthonormal_columns

    return Subspace(n, orthonormal_columns(rng.standard_normal((n, dim))))


def test_span_of_examples():
    xy = span_of([e(0), e(1)])
    assert xy.ambient_dim == 3 and xy.dim == 2
    zero = span_of([], ambient_dim=3)
    assert zero.dim == 0 and zero.is_zero
    tilted = span_of([[0.0, 0.5, 1.0]])
    np.testing.assert_allclose(
        np.abs(tilted.basis[:, 0]), [0.0, 1.0 / np.sqrt(5.0), 2.0 / np.sqrt(5.0)], atol=1e-12
    )


def test_span_of_errors():
    with pytest.raises(DimensionMismatch):
        span_of([[1.0, 0.0], [1.0, 0.0, 0.0]])
    with pytest.raises(DimensionMismatch):
        span_of([])


def test_subspace_validation():
    with pytest.raises(ValueError):
        Subspace(2, np.array([[1.0, 1.0], [0.0, 1.0]]))  # not orthonormal
    with pytest.raises(DimensionMismatch):
        Subspace(3, np.eye(2))


def test_projector_examples():
    np.testing.assert_allclose(projector(span_of([e(0), e(1)])), np.diag([1.0, 1.0, 0.0]))
    np.testing.assert_allclose(projector(Subspace.zero(3)), np.zeros((3, 3)))
    P = projector(span_of([[0.0, 0.5, 1.0]]))
    np.testing.assert_allclose(
        P, [[0.0, 0.0, 0.0], [0.0, 0.2, 0.4], [0.0, 0.4, 0.8]], atol=1e-12
    )


def test_projector_properties_random():
    rng = np.random.default_rng(5)
    for _ in range(500):
        n = int(rng.integers(1, 8))
        V = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        P = projector(V)
        assert np.max(np.abs(P @ P - P)) <= 1e-10
        assert np.max(np.abs(P - P.T)) <= 1e-10
        np.testing.assert_allclose(np.trace(P), V.dim, atol=1e-10)


def test_contains():
    xy = span_of([e(0), e(1)])
    assert contains(xy, span_of([e(0)]))
    assert not contains(span_of([e(0)]), span_of([e(1)]))
    assert contains(xy, span_of([[1.0, 1.0, 0.0]]))
    assert contains(span_of([e(0)]), Subspace.zero(3))
    with pytest.raises(DimensionMismatch):
        contains(xy, span_of([[1.0, 0.0]]))


def test_intersect_sum_complement():
    xy = span_of([e(0), e(1)])
    yz = span_of([e(1), e(2)])
    meet = intersect(xy, yz)
    assert meet.dim == 1
    np.testing.assert_allclose(np.abs(meet.basis[:, 0]), e(1), atol=1e-10)

    join = subspace_sum(span_of([e(0)]), span_of([e(1)]))
    assert join.dim == 2 and contains(join, xy) and contains(xy, join)

    comp = ortho_complement(xy)
    assert comp.dim == 1
    np.testing.assert_allclose(np.abs(comp.basis[:, 0]), e(2), atol=1e-12)

    full = intersect(Subspace.full(3), Subspace.full(3))
    assert full.dim == 3


def test_lattice_properties_random():
    rng = np.random.default_rng(17)
    for _ in range(200):
        n = int(rng.integers(1, 7))
        M = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        N = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        assert contains(subspace_sum(M, N), M)
        assert contains(M, intersect(M, N))
        assert M.dim + ortho_complement(M).dim == n


def test_friedrichs_examples():
    assert friedrichs_cos(span_of([e(0)]), span_of([e(1)])) == 0.0
    c = friedrichs_cos(span_of([[1.0, 0.0]]), span_of([[1.0, 1.0]]))
    np.testing.assert_allclose(c, 1.0 / np.sqrt(2.0), rtol=1e-12)
    # common e2 removed, remainders orthogonal
    assert friedrichs_cos(span_of([e(0), e(1)]), span_of([e(1), e(2)])) == 0.0


def test_friedrichs_symmetry_and_self():
    rng = np.random.default_rng(23)
    for _ in range(200):
        n = int(rng.integers(1, 7))
        M = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        N = random_subspace(rng, n, int(rng.integers(0, n + 1)))
        assert abs(friedrichs_cos(M, N) - friedrichs_cos(N, M)) <= 1e-10
        assert friedrichs_cos(M, M) == 0.0
        assert 0.0 <= friedrichs_cos(M, N) <= 1.0


def test_apply_operator():
    V = span_of([e(2)])
    assert apply_operator(np.eye(3), V).dim == 1
    assert apply_operator(np.diag([1.0, 1.0, 0.0]), V).is_zero
    image = apply_operator(np.array([[1.0, 1.0], [0.0, 1.0]]), span_of([[0.0, 1.0]]))
    np.testing.assert_allclose(np.abs(image.basis[:, 0]), [1.0, 1.0] / np.sqrt(2.0), atol=1e-12)
    with pytest.raises(DimensionMismatch):
        apply_operator(np.eye(2), V)


def test_null_and_range_space():
    T = np.diag([2.0, 1.0, 0.0])
    K = null_space(T)
    assert K.dim == 1
    np.testing.assert_allclose(np.abs(K.basis[:, 0]), e(2), atol=1e-12)
    R = range_space(T)
    assert R.dim == 2 and contains(R, span_of([e(0)]))
    assert null_space(np.zeros((3, 3))).dim == 3
    assert range_space(np.zeros((3, 3))).is_zero
