"""Closed-form Dirichlet-type kernels on the square and the cube.

Every kernel here has a defining exponential sum (see
:mod:`cubelattice.oracle`); the functions below are the fast paths. All
accept arrays of points with the coordinate axis last and broadcast over the
leading axes.

2D kernels take torus points ``x`` of shape (..., 2). The 3D Theta family
takes homogeneous points ``t`` of shape (..., 4); ``dn_3d_x`` and
``phi_star_3d`` take torus points of shape (..., 3).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from cubelattice.lattice_core import IndexSetKind, generate_index_set
from cubelattice.transform import sin_ratio, to_homogeneous


class Fallback(enum.Enum):
    DIRECT_SUM = "direct_sum"
    LIMIT_FORMULA = "limit_formula"


@dataclass(frozen=True)
class KernelEvalConfig:
    singular_threshold: float = 1e-8
    fallback: Fallback = Fallback.LIMIT_FORMULA

    def __post_init__(self):
        if not self.singular_threshold > 0:
            raise ValueError("singular_threshold must be positive")


DEFAULT_CONFIG = KernelEvalConfig()


def _dirichlet_2d_direct(n: int, x: np.ndarray) -> np.ndarray:
    # (1/4) sum over |v1| + |v2| <= n, written with cosines since the set is symmetric
    if n < 0:
        return np.zeros(x.shape[:-1])
    freqs = generate_index_set(IndexSetKind.LAMBDA_STAR, 2, n).astype(float)
    return 0.25 * np.cos(2 * np.pi * x @ freqs.T).sum(axis=-1)


def _dirichlet_2d_product(n: int, x: np.ndarray, threshold: float) -> np.ndarray:
    # rotate to a = x1 + x2, b = x1 - x2: the frequencies split into an
    # even-even and an odd-odd rectangle, each a product of 1D Dirichlet sums
    if n < 0:
        return np.zeros(x.shape[:-1])
    a = np.pi * (x[..., 0] + x[..., 1])
    b = np.pi * (x[..., 0] - x[..., 1])
    m_even = 2 * (n // 2) + 1
    m_odd = 2 * ((n + 1) // 2)
    even = sin_ratio(m_even, a, threshold) * sin_ratio(m_even, b, threshold)
    odd = sin_ratio(m_odd, a, threshold) * sin_ratio(m_odd, b, threshold) if m_odd else 0.0
    return 0.25 * (even + odd)


def dirichlet_2d(n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``D_n(x) = (1/4) sum_{v in Lambda*_n} e_v(x)`` via the cosine-ratio closed form.

    The ratio is singular on ``cos 2 pi x1 = cos 2 pi x2``; there the value
    comes from ``config.fallback``.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        return dirichlet_2d(n, x[None], config)[0]
    if n < 0:
        return np.zeros(x.shape[:-1])
    x1, x2 = x[..., 0], x[..., 1]
    denom = np.cos(2 * np.pi * x1) - np.cos(2 * np.pi * x2)
    numer = (
        np.cos(np.pi * (2 * n + 1) * x1) * np.cos(np.pi * x1)
        - np.cos(np.pi * (2 * n + 1) * x2) * np.cos(np.pi * x2)
    )
    singular = np.abs(denom) < config.singular_threshold
    with np.errstate(divide="ignore", invalid="ignore"):
        value = 0.5 * numer / denom
    if not np.any(singular):
        return value
    xs = x[singular]
    if config.fallback is Fallback.DIRECT_SUM:
        value[singular] = _dirichlet_2d_direct(n, xs)
    else:
        value[singular] = _dirichlet_2d_product(n, xs, config.singular_threshold)
    return value


def phi_star_2d(n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Boundary-weighted kernel ``(1/2n^2) sum c-hat_v e_v(x)`` over Lambda*_n.

    Closed form ``[2 (D_n + D_{n-1}) - (cos 2 pi n x1 + cos 2 pi n x2) / 2] / (2 n^2)``.
    """
    if n < 1:
        raise ValueError("phi_star_2d needs n >= 1")
    x = np.asarray(x, dtype=float)
    vertex = np.cos(2 * np.pi * n * x[..., 0]) + np.cos(2 * np.pi * n * x[..., 1])
    total = 2.0 * (dirichlet_2d(n, x, config) + dirichlet_2d(n - 1, x, config)) - 0.5 * vertex
    return total / (2.0 * n * n)


def _as_hom(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if t.shape[-1] != 4:
        raise ValueError("homogeneous points have 4 coordinates")
    return t


def theta(n: int, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``prod_i sin(pi n t_i) / sin(pi t_i)``; each factor tends to +-n at integers."""
    t = _as_hom(t)
    return np.prod(sin_ratio(n, np.pi * t, config.singular_threshold), axis=-1)


def theta_odd(n: int, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Odd-index companion of :func:`theta`; zero for ``n <= 0`` (empty index set).

    For even n the product of ``sin((n+2) pi t_i)/sin(2 pi t_i)`` is multiplied
    by ``sum_j sin(n pi t_j)/sin((n+2) pi t_j)``; for odd n the pair is
    ``(n+1, n+3)``. The sum is distributed into the product so that every
    factor is a ratio over ``sin(2 pi t)`` with an even multiplier.
    """
    t = _as_hom(t)
    if n <= 0:
        return np.zeros(t.shape[:-1])
    outer, inner = (n + 2, n) if n % 2 == 0 else (n + 1, n + 3)
    phi = 2 * np.pi * t
    a = sin_ratio(outer // 2, phi, config.singular_threshold)
    b = sin_ratio(inner // 2, phi, config.singular_threshold)
    total = np.zeros(t.shape[:-1])
    for j in range(4):
        others = np.prod(np.delete(a, j, axis=-1), axis=-1)
        total = total + b[..., j] * others
    return total


def odd_part(n: int, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Sum of ``exp(pi i j.t / 2)`` over the all-odd indices of H*_n."""
    return theta_odd(n, t, config) - theta_odd(n - 2, t, config)


def dn_star_3d(n: int, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``sum_{k in Lambda-dag*_n} e_k(x)`` in homogeneous coordinates; zero for n < 0."""
    t = _as_hom(t)
    if n < 0:
        return np.zeros(t.shape[:-1])
    return theta(n + 1, t, config) - theta(n, t, config) - odd_part(n, t, config)


def dn_3d_x(n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    return dn_star_3d(n, to_homogeneous(x), config)


def phi_star_3d_hom(n: int, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    if n < 1:
        raise ValueError("phi_star_3d needs n >= 1")
    t = _as_hom(t)
    thr = config.singular_threshold
    total = 0.5 * (dn_star_3d(n, t, config) + dn_star_3d(n - 1, t, config))

    # edges: classes of size 3
    half_lo, half = (n - 1) // 2, n // 2
    edges = np.zeros(t.shape[:-1])
    for v in range(4):
        ratio = sin_ratio(half_lo, 2 * np.pi * t[..., v], thr) if half_lo else 0.0
        inner = sum(np.cos(2 * np.pi * (n * t[..., j] + half * t[..., v])) for j in range(4) if j != v)
        edges = edges + ratio * inner
    total -= edges / 3.0

    # vertices of type (2,2): one class of size 6
    pairs = sum(np.cos(2 * np.pi * n * (t[..., a] + t[..., b])) for a in range(4) for b in range(a + 1, 4))
    total -= pairs / 3.0

    # vertices of types (1,3) and (3,1): present only for even n, classes of size 4
    if n % 2 == 0:
        total -= 0.5 * np.cos(2 * np.pi * n * t).sum(axis=-1)
    return total / (2.0 * n**3)


def phi_star_3d(n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``(1/2n^3) sum mu_v e_v(x)`` over Lambda-dag*_n, evaluated in closed form."""
    return phi_star_3d_hom(n, to_homogeneous(x), config)


def phi_star(dim: int, n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    if dim == 2:
        return phi_star_2d(n, x, config)
    if dim == 3:
        return phi_star_3d(n, x, config)
    raise ValueError(f"dim must be 2 or 3, got {dim}")


def phi(dim: int, n: int, x) -> np.ndarray:
    """Unweighted kernel ``(1/2n^d) sum e_v(x)`` over Lambda_n (2D) or Lambda-dag_n (3D).

    The half-open index set is not symmetric, so the value is complex.
    """
    x = np.asarray(x, dtype=float)
    kind = IndexSetKind.LAMBDA if dim == 2 else IndexSetKind.LAMBDA_DAG
    freqs = generate_index_set(kind, dim, n).astype(float)
    return np.exp(2j * np.pi * x @ freqs.T).sum(axis=-1) / (2.0 * n**dim)
