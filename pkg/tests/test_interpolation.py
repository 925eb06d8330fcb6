import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra import numpy as hnp

from cubelattice import interpolation as interp
from cubelattice.lattice_core import IndexSetKind, generate_index_set, xi_count
from cubelattice.transform import chebyshev_grid


def _delta_samples(nodes, hot):
    return {tuple(int(v) for v in k): float(tuple(k) == hot) for k in nodes}


@pytest.mark.parametrize("dim,n", [(2, 1), (2, 3), (2, 6), (3, 1), (3, 2), (3, 4)])
def test_delta_property(dim, n):
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    mat = interp.fundamental_matrix(dim, n, nodes / (2 * n))
    assert np.allclose(mat, np.eye(len(nodes)), atol=1e-10)


@settings(deadline=None, max_examples=15)
@given(st.sampled_from([2, 3]), st.integers(1, 4), st.data())
def test_partition_of_unity_and_evenness(dim, n, data):
    x = data.draw(hnp.arrays(float, (5, dim), elements=st.floats(-0.5, 0.5)))
    base = interp.fundamental_matrix(dim, n, x)
    assert np.allclose(base.sum(axis=1), 1.0, atol=1e-9)
    for signs in itertools.product((1, -1), repeat=dim):
        assert np.allclose(interp.fundamental_matrix(dim, n, x * np.array(signs)), base, atol=1e-11)


def test_fundamental_poly_matches_matrix_column():
    n, k = 3, (1, 1, 3)
    x = np.random.default_rng(0).uniform(-0.5, 0.5, (7, 3))
    nodes = [tuple(v) for v in generate_index_set(IndexSetKind.XI, 3, n).tolist()]
    col = interp.fundamental_matrix(3, n, x)[:, nodes.index(k)]
    assert np.allclose(interp.fundamental_poly(3, n, k, x), col, atol=1e-13)
    with pytest.raises(ValueError):
        interp.fundamental_poly(3, n, (1, 2, 1), x)


def test_closed_form_2d_matches_kernel_path():
    n = 4
    t = np.random.default_rng(1).uniform(-1, 1, (100, 2))
    for k in generate_index_set(IndexSetKind.XI, 2, n):
        a = interp.fundamental_poly_closed_2d(n, k, t)
        b = interp.fundamental_poly(2, n, k, interp.torus_from_algebraic(t))
        assert np.max(np.abs(a - b)) <= 1e-9


def test_trig_interpolant_reproduces_exponential():
    n = 3
    nu = generate_index_set(IndexSetKind.LAMBDA, 2, n)[5]
    f = lambda x: np.exp(2j * np.pi * np.dot(nu, x))
    op = interp.trig_interpolant(2, n, f)
    x = np.random.default_rng(2).uniform(-0.5, 0.5, (100, 2))
    assert np.max(np.abs(op.evaluate(x) - f(x.T))) < 1e-10


def test_trig_interpolant_constant():
    op = interp.trig_interpolant(3, 2, lambda x: 1.0)
    x = np.random.default_rng(3).uniform(-0.5, 0.5, (100, 3))
    assert np.allclose(op.evaluate(x), 1.0, atol=1e-12)


def test_sym_interpolant_boundary_sums_2d():
    n = 3
    nodes = generate_index_set(IndexSetKind.X_STAR, 2, n)
    values = {tuple(int(v) for v in k): float(i + 1) for i, k in enumerate(nodes)}
    op = interp.sym_trig_interpolant(2, n, values)
    at = lambda k: float(op.evaluate(np.array(k) / (2 * n)))
    assert at((1, 1)) == pytest.approx(values[(1, 1)], abs=1e-12)
    assert at((3, 1)) == pytest.approx(values[(3, 1)] + values[(-3, 1)], abs=1e-12)
    corners = [(3, 3), (3, -3), (-3, 3), (-3, -3)]
    assert at((3, 3)) == pytest.approx(sum(values[c] for c in corners), abs=1e-12)


@pytest.mark.parametrize("dim,n", [(2, 4), (3, 3)])
def test_space_reproduction(dim, n):
    rng = np.random.default_rng(4)
    coef = interp.random_space_element(dim, n, rng)
    f = lambda p: float(interp.chebyshev_series(coef, p))
    t = rng.uniform(-1, 1, (50, dim))
    got = interp.algebraic_interpolant(dim, n, f).evaluate(t)
    assert np.allclose(got, interp.chebyshev_series(coef, t), atol=1e-9)


def test_tn_tn_is_not_reproduced():
    n = 4
    f = lambda p: np.cos(n * np.arccos(p[0])) * np.cos(n * np.arccos(p[1]))
    op = interp.algebraic_interpolant(2, n, f)
    t = np.random.default_rng(5).uniform(-1, 1, (100, 2))
    exact = np.cos(n * np.arccos(t[:, 0])) * np.cos(n * np.arccos(t[:, 1]))
    assert np.max(np.abs(op.evaluate(t) - exact)) > 1e-3


@pytest.mark.parametrize("dim,n", [(2, 1), (2, 5), (3, 2), (3, 4)])
def test_space_dimension_equals_node_count(dim, n):
    basis = interp.interpolation_space_basis(dim, n)
    assert len(basis) == xi_count(dim, n)
    support = {m for b in basis for m in zip(*np.nonzero(b))}
    assert all(interp.space_index_set(dim, n, m) for m in support)


def test_coefficient_path_matches_kernel_path():
    dim, n = 3, 3
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    samples = {tuple(int(v) for v in k): np.sin(i) for i, k in enumerate(nodes)}
    op = interp.algebraic_interpolant(dim, n, samples)
    coef = interp.lagrange_coefficients(dim, n, samples)
    t = np.random.default_rng(6).uniform(-1, 1, (40, dim))
    assert np.allclose(op.evaluate(t), interp.chebyshev_series(coef, t), atol=1e-12)


def test_algebraic_interpolant_at_nodes():
    n = 3
    nodes = generate_index_set(IndexSetKind.XI, 2, n)
    f = lambda p: p[0] * p[1]
    op = interp.algebraic_interpolant(2, n, f)
    z = chebyshev_grid(nodes, n)
    assert np.allclose(op.evaluate(z), z[:, 0] * z[:, 1], atol=1e-12)


def test_sample_key_errors():
    nodes = generate_index_set(IndexSetKind.XI, 2, 2)
    samples = _delta_samples(nodes, (0, 0))
    del samples[(1, 1)]
    with pytest.raises(interp.SampleKeyError, match=r"missing keys \(1, 1\)"):
        interp.algebraic_interpolant(2, 2, samples)
    samples[(1, 1)] = 0.0
    samples[(9, 9)] = 0.0
    with pytest.raises(interp.SampleKeyError, match="unexpected"):
        interp.algebraic_interpolant(2, 2, samples)
    with pytest.raises(ValueError):
        interp.algebraic_interpolant(2, 0, {})


def test_symmetrization_is_idempotent():
    P = interp.SymmetrizationOperator(2)
    f = lambda x: np.sin(3 * x[..., 0]) + x[..., 1] ** 3 + x[..., 0] * x[..., 1] + 1
    x = np.random.default_rng(7).uniform(-0.5, 0.5, (20, 2))
    once = P(f)
    assert np.allclose(P(once)(x), once(x))
    assert np.allclose(once(x), 1.0)


def test_lebesgue_small_cases():
    assert interp.lebesgue_estimate(2, 1, 4) >= 1.0
    with pytest.raises(ValueError):
        interp.lebesgue_estimate(2, 4, 15)


@pytest.mark.parametrize("dim,n", [(2, 4), (3, 3)])
def test_lebesgue_nested_grids_are_monotone(dim, n):
    coarse = interp.lebesgue_estimate(dim, n, 4 * n)
    fine = interp.lebesgue_estimate(dim, n, 12 * n)
    assert fine >= coarse


def test_lebesgue_fast_path_matches_kernel_path():
    dim, n, grid = 2, 5, 20
    xg = interp.offset_grid(grid)
    pts = np.array(list(itertools.product(xg, repeat=dim)))
    assert interp.lebesgue_estimate(dim, n, grid) == pytest.approx(interp.lebesgue_function(dim, n, pts).max(), rel=1e-12)


def test_lebesgue_regression_values():
    # pinned from this implementation
    assert interp.lebesgue_estimate(2, 4, 16) == pytest.approx(2.624200974252108, rel=1e-12)
    assert interp.lebesgue_estimate(2, 8, 32) == pytest.approx(4.211186063146894, rel=1e-12)
    assert interp.lebesgue_estimate(3, 4, 16) == pytest.approx(3.2238069430442002, rel=1e-12)
