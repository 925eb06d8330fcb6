import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from cubelattice.oracle import chebyshev_recurrence
from cubelattice.transform import (
    Chart,
    CubePoint,
    HomogeneousPoint,
    chebyshev_eval,
    chebyshev_grid,
    cosine_map,
    from_homogeneous,
    hom_index_map,
    index_map_2d,
    index_map_2d_inverse,
    index_map_3d,
    index_map_3d_inverse,
    sin_ratio,
    to_homogeneous,
)

ints = st.integers(-50, 50)


@given(ints, ints)
def test_index_map_2d_round_trip(a, b):
    assert index_map_2d_inverse(index_map_2d((a, b))) == (a, b)


@given(ints, ints, ints)
def test_index_map_3d_round_trip(a, b, c):
    assert index_map_3d_inverse(index_map_3d((a, b, c))) == (a, b, c)


def test_inverse_maps_reject_wrong_parity():
    with pytest.raises(ValueError):
        index_map_2d_inverse((1, 2))
    with pytest.raises(ValueError):
        index_map_3d_inverse((1, 2, 3))


@given(hnp.arrays(float, (5, 3), elements=st.floats(-0.5, 0.5)))
def test_homogeneous_round_trip(x):
    t = to_homogeneous(x)
    assert np.allclose(t.sum(axis=-1), 0.0, atol=1e-15)
    assert np.allclose(from_homogeneous(t), x, atol=1e-15)


@given(ints, ints, ints, hnp.arrays(float, 3, elements=st.floats(-0.5, 0.5)))
def test_hom_index_map_preserves_phase(a, b, c, x):
    # e_k(x) = exp(pi i j.t / 2) with j the homogeneous index of k
    j = np.array(hom_index_map((a, b, c)), dtype=float)
    lhs = np.exp(2j * np.pi * np.dot((a, b, c), x))
    rhs = np.exp(0.5j * np.pi * np.dot(j, to_homogeneous(x)))
    assert abs(lhs - rhs) < 1e-9


def test_homogeneous_point_validates_sum():
    HomogeneousPoint((0.25, -0.25, 0.5, -0.5))
    with pytest.raises(ValueError):
        HomogeneousPoint((0.1, 0.0, 0.0, 0.0))


def test_cube_point_charts():
    p = CubePoint.torus(0.25, 0.0)
    q = cosine_map(p)
    assert q.chart is Chart.ALGEBRAIC
    assert q.coords[0] == pytest.approx(0.0, abs=1e-15)
    assert q.coords[1] == 1.0
    with pytest.raises(ValueError):
        cosine_map(q)
    with pytest.raises(ValueError):
        CubePoint.torus(0.6, 0.0)


def test_chebyshev_grid_exact_symmetry():
    n = 7
    k = np.arange(n + 1)
    z = chebyshev_grid(k, n)
    assert z[0] == 1.0 and z[-1] == -1.0
    assert np.array_equal(z, -z[::-1])
    assert chebyshev_grid(2, 4) == 0.0


@given(st.integers(0, 30), hnp.arrays(float, 8, elements=st.floats(-1, 1)), st.sampled_from(["first", "second"]))
def test_chebyshev_eval_matches_recurrence(m, t, kind):
    assert np.allclose(chebyshev_eval(kind, m, t), chebyshev_recurrence(kind, m, t), atol=1e-10 * (m + 1) ** 2)


def test_chebyshev_eval_endpoints():
    assert chebyshev_eval("second", 4, 1.0) == pytest.approx(5.0)
    assert chebyshev_eval("second", 4, -1.0) == pytest.approx(5.0)
    assert chebyshev_eval("second", 3, -1.0) == pytest.approx(-4.0)
    with pytest.raises(ValueError):
        chebyshev_eval("first", 2, 1.5)


@given(st.integers(0, 12), st.integers(-3, 3), st.floats(-1e-9, 1e-9))
def test_sin_ratio_limit(m, p, eps):
    phi = p * np.pi + eps
    expected = sum(np.cos((m - 1 - 2 * j) * phi) for j in range(m))  # Dirichlet sum form
    assert sin_ratio(m, phi) == pytest.approx(expected, abs=1e-9 * max(1, m * m))
