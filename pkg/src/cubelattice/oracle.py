"""Brute-force ground truth for the verification suites.

Nothing in here calls :mod:`cubelattice.kernels` or
:mod:`cubelattice.cubature`; the kernel sums are written directly from their
defining index sets and weights, and the quadrature is the classical tensor
Gauss-Chebyshev rule.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Callable

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from cubelattice.lattice_core import (
    IndexSetKind,
    frequency_weight_array,
    generate_index_set,
)
from cubelattice.transform import to_homogeneous


def exact_moment(weight: str, multi_index) -> Fraction:
    """Normalized moment ``pi^-d int prod P_{j_i}(t_i) W(t) dt``.

    ``P = T`` for ``W0`` and ``P = U`` for ``W1``. Per axis the T-moment is
    ``1`` if ``j = 0`` else ``0``; the U-moment is ``1/2`` if ``j = 0`` else ``0``.
    """
    idx = tuple(int(v) for v in multi_index)
    if any(v < 0 for v in idx):
        raise ValueError("multi-index entries must be nonnegative")
    if weight == "W0":
        per_axis = Fraction(1)
    elif weight == "W1":
        per_axis = Fraction(1, 2)
    else:
        raise ValueError(f"weight must be 'W0' or 'W1', got {weight!r}")
    if any(idx):
        return Fraction(0)
    return per_axis ** len(idx)


class MomentTable(dict):
    """Lazy map from multi-index to :func:`exact_moment`."""

    def __init__(self, weight: str):
        super().__init__()
        self.weight = weight

    def __missing__(self, key):
        value = exact_moment(self.weight, key)
        self[key] = value
        return value


def chebyshev_recurrence(kind: str, degree: int, t) -> np.ndarray:
    """Three-term recurrence ``P_{m+1} = 2 t P_m - P_{m-1}``."""
    t = np.asarray(t, dtype=float)
    p_prev = np.ones_like(t)
    if degree == 0:
        return p_prev
    p = t.copy() if kind == "first" else 2 * t
    for _ in range(degree - 1):
        p_prev, p = p, 2 * t * p - p_prev
    return p


# -- direct kernel sums -------------------------------------------------------

KERNEL_IDS = (
    "dirichlet_2d",
    "phi_star_2d",
    "phi_2d",
    "dn_3d",
    "dn_3d_hom",
    "phi_star_3d",
    "phi_3d",
    "odd_part_hom",
)


def _exp_sum(x: np.ndarray, freqs: np.ndarray, weights: np.ndarray | None = None) -> np.ndarray:
    phase = np.exp(2j * np.pi * (x @ freqs.T.astype(float)))
    if weights is None:
        return phase.sum(axis=-1)
    return phase @ weights


@functools.lru_cache(maxsize=None)
def homogeneous_h_star(n: int) -> np.ndarray:
    """``H*_n``: zero-sum integer 4-vectors, all coordinates congruent mod 4, spread <= 4n."""
    if n < 0:
        return np.zeros((0, 4), dtype=np.int64)
    rng = range(-3 * n - 3, 3 * n + 4)
    rows = []
    for j1, j2, j3 in itertools.product(rng, repeat=3):
        j4 = -(j1 + j2 + j3)
        j = (j1, j2, j3, j4)
        if not (j1 % 4 == j2 % 4 == j3 % 4 == j4 % 4):
            continue
        if max(j) - min(j) <= 4 * n:
            rows.append(j)
    out = np.array(rows, dtype=np.int64).reshape(-1, 4)
    out.flags.writeable = False
    return out


def homogeneous_h_odd(n: int) -> np.ndarray:
    h = homogeneous_h_star(n)
    return h[np.all(h % 2 == 1, axis=1)]


def direct_kernel_sum(kernel_id: str, n: int, x) -> np.ndarray:
    """Literal summation of a kernel's defining series at torus points ``x``.

    ``dn_3d_hom`` sums over ``G_n`` in homogeneous coordinates instead of
    over Lambda-dag*_n. ``odd_part_hom`` takes homogeneous points of shape
    (..., 4) and is ``sum_{j in H^odd_n} exp(pi i j.t / 2)``.
    """
    x = np.asarray(x, dtype=float)
    if kernel_id == "dirichlet_2d":
        if n < 0:
            return np.zeros(x.shape[:-1], dtype=complex)
        return _exp_sum(x, generate_index_set(IndexSetKind.LAMBDA_STAR, 2, n)) / 4
    if kernel_id == "phi_2d":
        return _exp_sum(x, generate_index_set(IndexSetKind.LAMBDA, 2, n)) / (2 * n**2)
    if kernel_id == "phi_3d":
        return _exp_sum(x, generate_index_set(IndexSetKind.LAMBDA_DAG, 3, n)) / (2 * n**3)
    if kernel_id == "phi_star_2d":
        freqs, w = frequency_weight_array(2, n)
        return _exp_sum(x, freqs, w) / (2 * n**2)
    if kernel_id == "dn_3d":
        if n < 0:
            return np.zeros(x.shape[:-1], dtype=complex)
        return _exp_sum(x, generate_index_set(IndexSetKind.LAMBDA_DAG_STAR, 3, n))
    if kernel_id == "phi_star_3d":
        freqs, w = frequency_weight_array(3, n)
        return _exp_sum(x, freqs, w) / (2 * n**3)
    if kernel_id == "dn_3d_hom":
        return _hom_sum(_g_n(n), to_homogeneous(x))
    if kernel_id == "odd_part_hom":
        return _hom_sum(homogeneous_h_odd(n), x)
    raise ValueError(f"unknown kernel id {kernel_id!r}")


def _g_n(n: int) -> np.ndarray:
    h = homogeneous_h_star(n)
    return h[np.all(h % 2 == 0, axis=1)]


def _hom_sum(idx: np.ndarray, t: np.ndarray) -> np.ndarray:
    if len(idx) == 0:
        return np.zeros(t.shape[:-1], dtype=complex)
    return np.exp(0.5j * np.pi * (t @ idx.T.astype(float))).sum(axis=-1)


def theta_direct(n: int, t) -> np.ndarray:
    """``prod_i sin(pi n t_i)/sin(pi t_i)`` as a product of 1D exponential sums."""
    t = np.asarray(t, dtype=float)
    if n == 0:
        return np.zeros(t.shape[:-1])
    m = np.arange(n) - (n - 1) / 2.0
    factors = np.exp(2j * np.pi * t[..., None] * m).sum(axis=-1).real
    return np.prod(factors, axis=-1)


# -- reference quadrature -----------------------------------------------------


def gauss_chebyshev(order: int, weight: str = "W0") -> tuple[np.ndarray, np.ndarray]:
    """1D nodes and weights normalized so the weights sum to ``pi^-1 int W``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if weight == "W0":
        nodes, w = npcheb.chebgauss(order)
        return nodes, w / np.pi
    if weight == "W1":
        i = np.arange(1, order + 1)
        theta = i * np.pi / (order + 1)
        return np.cos(theta), np.sin(theta) ** 2 / (order + 1)
    raise ValueError(f"weight must be 'W0' or 'W1', got {weight!r}")


def tensor_rule(dim: int, order: int, weight: str = "W0") -> tuple[np.ndarray, np.ndarray]:
    nodes, w = gauss_chebyshev(order, weight)
    grids = np.meshgrid(*([nodes] * dim), indexing="ij")
    wgrid = np.ones([order] * dim)
    for axis in range(dim):
        shape = [1] * dim
        shape[axis] = order
        wgrid = wgrid * w.reshape(shape)
    pts = np.stack([g.ravel() for g in grids], axis=-1)
    return pts, wgrid.ravel()


def reference_quadrature(f: Callable[[np.ndarray], np.ndarray], dim: int, order: int, weight: str = "W0") -> float:
    """``pi^-d int f W`` by the tensor Gauss-Chebyshev rule; ``f`` maps (N, d) -> (N,)."""
    pts, w = tensor_rule(dim, order, weight)
    values = np.asarray(f(pts))
    return float(np.sum(w * values))


def coefficient_extract(f: Callable[[np.ndarray], np.ndarray], dim: int, resolution: int) -> dict[tuple[int, ...], float]:
    """Product-Chebyshev coefficients ``a_m`` with ``f = sum a_m prod T_{m_i}(t_i)``.

    Uses the tensor Gauss-Chebyshev rule with ``resolution`` points per axis
    and returns every ``m`` with ``max(m) <= resolution // 2``.
    """
    nodes, w = gauss_chebyshev(resolution, "W0")
    max_deg = resolution // 2
    pts, _ = tensor_rule(dim, resolution, "W0")
    values = np.asarray(f(pts), dtype=float).reshape([resolution] * dim)
    theta = np.arccos(nodes)
    degs = np.arange(max_deg + 1)
    # A[m, i] = norm_m * w_i * T_m(node_i)
    A = np.cos(np.outer(degs, theta)) * w
    A[1:] *= 2.0
    coeffs = values
    for axis in range(dim):
        coeffs = np.tensordot(A, coeffs, axes=([1], [axis]))
        coeffs = np.moveaxis(coeffs, 0, axis)
    return {m: float(coeffs[m]) for m in itertools.product(range(max_deg + 1), repeat=dim)}
