"""Trigonometric and algebraic Lagrange interpolation on lattice nodes.

Torus points ``x`` live in ``[-1/2, 1/2]^d``; algebraic points ``t`` in
``[-1, 1]^d`` with ``t_i = cos(2 pi x_i)``. Node index ``k`` sits at
``x = k / 2n`` and, for the algebraic operator, at ``t = cos(k pi / n)``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

import numpy as np

from cubelattice.kernels import DEFAULT_CONFIG, KernelEvalConfig, dirichlet_2d, phi, phi_star
from cubelattice.lattice_core import (
    GeneratorMatrix,
    IndexSetKind,
    frequency_weight_array,
    generate_index_set,
    lambda_weight,
)
from cubelattice.transform import chebyshev_grid


class Flavor(enum.Enum):
    TRIG_I = "trig_I"
    TRIG_ISTAR = "trig_Istar"
    ALGEBRAIC_L = "algebraic_L"


_NODE_SET = {
    Flavor.TRIG_I: IndexSetKind.X,
    Flavor.TRIG_ISTAR: IndexSetKind.X_STAR,
    Flavor.ALGEBRAIC_L: IndexSetKind.XI,
}


class SampleKeyError(KeyError):
    """Sample keys do not match the node set."""

    def __init__(self, missing, extra):
        self.missing = sorted(missing)
        self.extra = sorted(extra)
        parts = []
        if self.missing:
            parts.append("missing keys " + ", ".join(map(str, self.missing)))
        if self.extra:
            parts.append("unexpected keys " + ", ".join(map(str, self.extra)))
        super().__init__("; ".join(parts))

    def __str__(self) -> str:
        return self.args[0]


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"interpolation needs n >= 1, got {n}")


def node_indices(flavor: Flavor | str, dim: int, n: int) -> np.ndarray:
    return generate_index_set(_NODE_SET[Flavor(flavor)], dim, n)


def _key(k) -> tuple[int, ...]:
    return tuple(int(v) for v in k)


@dataclass(frozen=True)
class SymmetrizationOperator:
    """``(P f)(x) = 2^-d sum_sigma f(sigma x)`` over all sign flips."""

    dim: int

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"dim must be 2 or 3, got {self.dim}")

    @property
    def signs(self) -> np.ndarray:
        return np.array(list(itertools.product((1.0, -1.0), repeat=self.dim)))

    def __call__(self, f: Callable[[np.ndarray], np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
        signs = self.signs

        def symmetrized(x):
            x = np.asarray(x, dtype=float)
            flipped = x[..., None, :] * signs
            return np.mean(f(flipped), axis=-1)

        return symmetrized


@dataclass(frozen=True)
class Interpolant:
    """Interpolation operator applied to samples on its node set.

    ``evaluate`` takes torus points for the trig flavors and algebraic points
    for ``algebraic_L``.
    """

    dim: int
    n: int
    flavor: Flavor
    samples: Mapping[tuple[int, ...], complex]
    config: KernelEvalConfig = DEFAULT_CONFIG
    _nodes: np.ndarray = field(init=False, repr=False, compare=False)
    _values: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_n(self.n)
        flavor = Flavor(self.flavor)
        object.__setattr__(self, "flavor", flavor)
        nodes = node_indices(flavor, self.dim, self.n)
        expected = {_key(k) for k in nodes}
        given = {_key(k) for k in self.samples}
        if expected != given:
            raise SampleKeyError(expected - given, given - expected)
        samples = {_key(k): v for k, v in self.samples.items()}
        object.__setattr__(self, "samples", MappingProxyType(samples))
        object.__setattr__(self, "_nodes", nodes)
        object.__setattr__(self, "_values", np.array([samples[_key(k)] for k in nodes]))

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    def evaluate(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        single = points.ndim == 1
        points = np.atleast_2d(points)
        if self.flavor is Flavor.ALGEBRAIC_L:
            basis = fundamental_matrix(self.dim, self.n, torus_from_algebraic(points), self.config)
            out = basis @ self._values
        else:
            shift = points[:, None, :] - self._nodes / (2.0 * self.n)
            if self.flavor is Flavor.TRIG_I:
                kern = phi(self.dim, self.n, shift)
            else:
                kern = phi_star(self.dim, self.n, shift, self.config)
            out = kern @ self._values
        return out[0] if single else out


def _samples_from(flavor: Flavor, dim: int, n: int, samples) -> dict:
    if callable(samples):
        nodes = node_indices(flavor, dim, n)
        if flavor is Flavor.ALGEBRAIC_L:
            pts = chebyshev_grid(nodes, n)
        else:
            pts = nodes / (2.0 * n)
        return {_key(k): samples(p) for k, p in zip(nodes, pts)}
    return dict(samples)


def trig_interpolant(dim: int, n: int, samples) -> Interpolant:
    """``I_n f = sum_{k in X_n} f(k/2n) Phi_n(x - k/2n)``.

    ``samples`` is a mapping keyed by X_n or a callable on torus points.
    """
    return Interpolant(dim, n, Flavor.TRIG_I, _samples_from(Flavor.TRIG_I, dim, n, samples))


def sym_trig_interpolant(dim: int, n: int, samples, config: KernelEvalConfig = DEFAULT_CONFIG) -> Interpolant:
    """``I*_n f = sum_{k in X*_n} f(k/2n) Phi*_n(x - k/2n)``.

    At a boundary node the value is the sum of the samples over its class of
    nodes congruent modulo integer translations.
    """
    return Interpolant(dim, n, Flavor.TRIG_ISTAR, _samples_from(Flavor.TRIG_ISTAR, dim, n, samples), config)


def algebraic_interpolant(dim: int, n: int, samples, config: KernelEvalConfig = DEFAULT_CONFIG) -> Interpolant:
    """Lagrange interpolant on the nodes ``cos(k pi/n)``, ``k`` in Xi_n."""
    return Interpolant(dim, n, Flavor.ALGEBRAIC_L, _samples_from(Flavor.ALGEBRAIC_L, dim, n, samples), config)


def torus_from_algebraic(t) -> np.ndarray:
    """Inverse cosine chart onto ``[0, 1/2]^d``."""
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0):
        raise ValueError("algebraic points must lie in [-1, 1]^d")
    return np.arccos(t) / (2 * np.pi)


def _check_xi(k, dim: int, n: int) -> tuple[int, ...]:
    k = _key(k)
    if len(k) != dim or any(v < 0 or v > n for v in k) or len({v % 2 for v in k}) != 1:
        raise ValueError(f"{k} is not in Xi_{n} for dim={dim}")
    return k


def fundamental_poly(dim: int, n: int, k, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``l_k(x) = lambda_k * P[Phi*_n(. - k/2n)](x)`` at torus points ``x``."""
    _check_n(n)
    k = _check_xi(k, dim, n)
    lam = float(lambda_weight(k, dim, n))
    shift = np.asarray(k, dtype=float) / (2.0 * n)
    sym = SymmetrizationOperator(dim)
    return lam * sym(lambda y: phi_star(dim, n, y - shift, config))(x)


def fundamental_poly_closed_2d(n: int, k, t, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """2D ``l_k`` at algebraic points from the Dirichlet kernels directly.

    ``lambda_k / 2n^2 * [2 P(D_n + D_{n-1})(. - k/2n) - ((-1)^k1 T_n(t1) + (-1)^k2 T_n(t2)) / 2]``
    """
    _check_n(n)
    k = _check_xi(k, 2, n)
    t = np.asarray(t, dtype=float)
    x = torus_from_algebraic(t)
    shift = np.asarray(k, dtype=float) / (2.0 * n)
    sym = SymmetrizationOperator(2)
    dsum = sym(lambda y: dirichlet_2d(n, y - shift, config) + dirichlet_2d(n - 1, y - shift, config))(x)
    tn = np.cos(n * np.arccos(t))
    corr = (-1) ** k[0] * tn[..., 0] + (-1) ** k[1] * tn[..., 1]
    return float(lambda_weight(k, 2, n)) / (2.0 * n * n) * (2.0 * dsum - 0.5 * corr)


def fundamental_matrix(dim: int, n: int, x, config: KernelEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """``M[p, i] = l_{k_i}(x_p)`` for every node ``k_i`` in Xi_n, kernel path."""
    _check_n(n)
    x = np.atleast_2d(np.asarray(x, dtype=float))
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    lam = np.array([float(lambda_weight(k, dim, n)) for k in nodes])
    signs = SymmetrizationOperator(dim).signs
    flipped = x[:, None, :] * signs  # (P, S, d)
    shift = nodes / (2.0 * n)  # (K, d)
    vals = phi_star(dim, n, flipped[:, None, :, :] - shift[None, :, None, :], config)
    return vals.mean(axis=-1) * lam


# -- Chebyshev coefficient representation --------------------------------------


def _orthant_weights(dim: int, n: int) -> np.ndarray:
    """Boundary weights of the frequency set restricted to nonnegative indices, as a dense tensor."""
    freqs, w = frequency_weight_array(dim, n)
    mu = np.zeros((n + 1,) * dim)
    keep = np.all(freqs >= 0, axis=1)
    mu[tuple(freqs[keep].T)] = w[keep]
    return mu


def _node_factor(n: int, nodes: np.ndarray, axis: int) -> np.ndarray:
    # a[k, m] = 1 for m = 0, else 2 cos(pi m k / n)
    m = np.arange(n + 1)
    a = 2.0 * np.cos(np.pi * np.outer(nodes[:, axis], m) / n)
    a[:, 0] = 1.0
    return a


def fundamental_coefficients(dim: int, n: int) -> np.ndarray:
    """``C[i, m] `` with ``l_{k_i}(t) = sum_m C[i, m] prod_j T_{m_j}(t_j)``; shape (K, (n+1)^d)."""
    _check_n(n)
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    lam = np.array([float(lambda_weight(k, dim, n)) for k in nodes])
    coef = _orthant_weights(dim, n)[None] * (lam / (2.0 * n**dim)).reshape((-1,) + (1,) * dim)
    for axis in range(dim):
        shape = [len(nodes)] + [1] * dim
        shape[axis + 1] = n + 1
        coef = coef * _node_factor(n, nodes, axis).reshape(shape)
    return coef


def lagrange_coefficients(dim: int, n: int, samples) -> np.ndarray:
    """Product-Chebyshev coefficient tensor of the algebraic interpolant, shape ``(n+1,)*dim``."""
    interp = samples if isinstance(samples, Interpolant) else algebraic_interpolant(dim, n, samples)
    return np.tensordot(interp._values.real, fundamental_coefficients(dim, n), axes=(0, 0))


def chebyshev_series(coef: np.ndarray, t) -> np.ndarray:
    """``sum_m coef[m] prod_j T_{m_j}(t_j)`` at algebraic points of shape (..., d)."""
    t = np.asarray(t, dtype=float)
    dim = coef.ndim
    theta = np.arccos(np.clip(t, -1.0, 1.0)).reshape(-1, dim)
    bases = [np.cos(np.outer(theta[:, j], np.arange(coef.shape[j]))) for j in range(dim)]
    letters = "abc"[:dim]
    subscripts = letters + "," + ",".join(f"p{c}" for c in letters) + "->p"
    return np.einsum(subscripts, coef, *bases, optimize=True).reshape(t.shape[:-1])


# -- interpolation space ------------------------------------------------------


def interpolation_space_basis(dim: int, n: int) -> list[np.ndarray]:
    """Basis of the space the algebraic interpolant maps into.

    Each element is ``sum_{v in class} prod_j T_{|v_j|}`` over a class of
    frequencies congruent modulo the lattice generator, as a coefficient
    tensor; linearly dependent classes are dropped. The number of elements
    equals the node count.
    """
    _check_n(n)
    freqs, _ = frequency_weight_array(dim, n)
    lattice = GeneratorMatrix.for_dim(dim, n).transpose
    keys = lattice.coset_key(freqs)
    classes: dict[tuple[int, ...], np.ndarray] = {}
    for v, key in zip(np.abs(freqs), map(_key, keys)):
        tensor = classes.setdefault(key, np.zeros((n + 1,) * dim))
        tensor[tuple(v)] += 1.0
    basis: list[np.ndarray] = []
    seen: set[bytes] = set()
    stacked = np.zeros((0, (n + 1) ** dim))
    rank = 0
    for key in sorted(classes):
        tensor = classes[key]
        if tensor.tobytes() in seen:
            continue
        seen.add(tensor.tobytes())
        trial = np.vstack([stacked, tensor.ravel()])
        if np.linalg.matrix_rank(trial) > rank:
            stacked, rank = trial, rank + 1
            basis.append(tensor)
    return basis


def random_space_element(dim: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Coefficient tensor of a random combination of :func:`interpolation_space_basis`."""
    basis = interpolation_space_basis(dim, n)
    weights = rng.standard_normal(len(basis))
    return sum(w * b for w, b in zip(weights, basis))


def space_index_set(dim: int, n: int, m) -> bool:
    """Nonnegative index ``m`` lies in the support of the interpolation space."""
    m = [int(v) for v in m]
    if any(v < 0 for v in m):
        return False
    if dim == 2:
        return m[0] + m[1] <= n
    return all(m[a] + m[b] <= n for a in range(3) for b in range(a + 1, 3))


# -- Lebesgue constant --------------------------------------------------------


def offset_grid(grid_per_axis: int) -> np.ndarray:
    """Cell midpoints of ``[0, 1/2]`` split into ``grid_per_axis`` cells.

    Refining by an odd factor contains the coarser grid.
    """
    return (np.arange(grid_per_axis) + 0.5) / (2.0 * grid_per_axis)


def lebesgue_function(dim: int, n: int, x) -> np.ndarray:
    """``sum_k |l_k(x)|`` at torus points ``x`` via the kernel path."""
    return np.abs(fundamental_matrix(dim, n, x)).sum(axis=-1)


def lebesgue_estimate(dim: int, n: int, grid_per_axis: int, batch: int = 64) -> float:
    """Max of the Lebesgue function over the offset tensor grid and the nodes.

    Uses the Chebyshev coefficient tensor of every fundamental polynomial and
    contracts one axis at a time; ``batch`` bounds the number of nodes held at once.
    """
    _check_n(n)
    if grid_per_axis < 4 * n:
        raise ValueError(f"grid_per_axis must be >= 4n = {4 * n}, got {grid_per_axis}")
    coef = fundamental_coefficients(dim, n)
    xg = offset_grid(grid_per_axis)
    basis = np.cos(2 * np.pi * np.outer(np.arange(n + 1), xg))  # (M, G)
    total = np.zeros((grid_per_axis,) * dim)
    for start in range(0, len(coef), batch):
        block = coef[start : start + batch]
        for _ in range(dim):
            block = np.tensordot(block, basis, axes=([1], [0]))
        total += np.abs(block).sum(axis=0)
    # every node contributes exactly one delta, so the function equals 1 there
    return max(1.0, float(total.max()))


def lebesgue_ratio(estimate: float, n: int) -> float:
    """``estimate / (log n)^3``."""
    return estimate / math.log(n) ** 3
