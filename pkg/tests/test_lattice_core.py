from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubelattice.lattice_core import (
    BoundaryKind,
    GeneratorMatrix,
    IndexSetKind,
    classify_frequency,
    classify_spatial,
    frequency_weights,
    generate_index_set,
    lambda_weight,
    orthogonality_sum,
    orthogonality_value,
    spatial_weights,
    xi_count,
    xi_interior_count,
)

K = IndexSetKind

# counted by brute force over boxes, independent of the generators
COUNTS_2D = {
    2: {K.LAMBDA: 8, K.LAMBDA_STAR: 13, K.X: 8, K.X_STAR: 13, K.XI: 5, K.XI_INTERIOR: 1},
    3: {K.LAMBDA: 18, K.LAMBDA_STAR: 25, K.X: 18, K.X_STAR: 25, K.XI: 8, K.XI_INTERIOR: 2},
}
COUNTS_3D = {
    2: {K.LAMBDA: 16, K.LAMBDA_STAR: 35, K.LAMBDA_DAG: 16, K.LAMBDA_DAG_STAR: 33,
        K.X: 16, K.X_STAR: 35, K.XI: 9, K.XI_INTERIOR: 1},
    3: {K.LAMBDA: 54, K.LAMBDA_STAR: 91, K.LAMBDA_DAG: 54, K.LAMBDA_DAG_STAR: 87,
        K.X: 54, K.X_STAR: 91, K.XI: 16, K.XI_INTERIOR: 2},
}


@pytest.mark.parametrize("n", [2, 3])
def test_counts_2d(n):
    for kind, count in COUNTS_2D[n].items():
        assert len(generate_index_set(kind, 2, n)) == count, kind


@pytest.mark.parametrize("n", [2, 3])
def test_counts_3d(n):
    for kind, count in COUNTS_3D[n].items():
        assert len(generate_index_set(kind, 3, n)) == count, kind


def test_xi_small_cases():
    assert sorted(map(tuple, generate_index_set(K.XI, 2, 1))) == [(0, 0), (1, 1)]
    assert sorted(map(tuple, generate_index_set(K.XI, 2, 2))) == [(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)]


@given(st.integers(1, 20), st.sampled_from([2, 3]))
def test_xi_count_matches_generation(n, dim):
    assert xi_count(dim, n) == len(generate_index_set(K.XI, dim, n))
    assert xi_interior_count(dim, n) == len(generate_index_set(K.XI_INTERIOR, dim, n))


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate_index_set(K.XI, 4, 2)
    with pytest.raises(ValueError):
        generate_index_set(K.LAMBDA_DAG, 2, 2)


def test_generated_sets_are_read_only():
    pts = generate_index_set(K.X_STAR, 2, 3)
    with pytest.raises(ValueError):
        pts[0, 0] = 99


def test_generator_determinants():
    for n in range(1, 6):
        assert GeneratorMatrix.rhombus(n).det == 2 * n * n
        assert GeneratorMatrix.fcc(n).det == 2 * n**3


@settings(max_examples=60)
@given(
    st.sampled_from([2, 3]),
    st.integers(1, 5),
    st.lists(st.integers(-30, 30), min_size=3, max_size=3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)
def test_coset_key_is_invariant_under_lattice_shifts(dim, n, v, c):
    lat = GeneratorMatrix.for_dim(dim, n)
    v = np.array(v[:dim])
    shift = lat.array @ np.array(c[:dim])
    assert np.array_equal(lat.coset_key(v), lat.coset_key(v + shift))
    assert lat.contains(v - lat.coset_key(v))


@pytest.mark.parametrize("dim,n", [(2, 2), (2, 5), (3, 2), (3, 4)])
def test_spatial_weights_sum_to_lattice_volume(dim, n):
    # one full period of X_n* carries total weight |X_n| = 2 n^d
    assert sum(spatial_weights(dim, n)) == 2 * n**dim


@pytest.mark.parametrize("dim,n", [(2, 2), (2, 5), (3, 2), (3, 4)])
def test_frequency_weights_sum_to_lattice_volume(dim, n):
    assert sum(frequency_weights(dim, n)) == 2 * n**dim


def test_classify_spatial_2d():
    n = 3
    assert classify_spatial((0, 0), 2, n).kind is BoundaryKind.INTERIOR
    assert classify_spatial((3, 1), 2, n).weight == Fraction(1, 2)
    assert classify_spatial((3, 3), 2, n).weight == Fraction(1, 4)


def test_classify_frequency_3d_multiplicities():
    mults = {classify_frequency(j, 3, 3).multiplicity for j in generate_index_set(K.LAMBDA_DAG_STAR, 3, 3)}
    assert mults <= {1, 2, 3, 4, 6}
    assert classify_frequency((0, 0, 0), 3, 3).kind is BoundaryKind.INTERIOR


def test_lambda_weight_values():
    # 2^(d - #{k_i in {0, n}})
    assert lambda_weight((0, 0), 2, 4) == 1
    assert lambda_weight((1, 1), 2, 4) == 4
    assert lambda_weight((2, 4), 2, 4) == 2
    assert lambda_weight((1, 3, 1), 3, 4) == 8
    assert lambda_weight((0, 2, 4), 3, 4) == 2


@pytest.mark.parametrize("dim,n", [(2, 3), (3, 2)])
def test_lambda_weights_sum(dim, n):
    assert sum(lambda_weight(k, dim, n) for k in generate_index_set(K.XI, dim, n)) == 2 * n**dim


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 4), st.lists(st.integers(-12, 12), min_size=3, max_size=3))
def test_orthogonality_sum_matches_float_sum(dim, n, idx):
    idx = tuple(idx[:dim])
    for side in ("spatial", "frequency"):
        exact = orthogonality_sum(idx, dim, n, side)
        assert exact in (0, 1)
        assert abs(orthogonality_value(idx, dim, n, side) - exact) < 1e-9
