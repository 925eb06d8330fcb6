"""Index sets of the rhombus (2D) and rhombic-dodecahedron (3D) tilings.

All sets are returned as ``(N, d)`` integer arrays in lexicographic order.
Boundary weights are reciprocal congruence-class sizes, kept as exact
:class:`fractions.Fraction` values.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np


class IndexSetKind(enum.Enum):
    LAMBDA = "Lambda"
    LAMBDA_STAR = "LambdaStar"
    LAMBDA_DAG = "LambdaDag"
    LAMBDA_DAG_STAR = "LambdaDagStar"
    X = "X"
    X_STAR = "XStar"
    XI = "Xi"
    XI_INTERIOR = "XiInterior"


class BoundaryKind(enum.Enum):
    INTERIOR = "interior"
    FACE = "face"
    EDGE = "edge"
    VERTEX = "vertex"


@dataclass(frozen=True)
class BoundaryClass:
    kind: BoundaryKind
    multiplicity: int

    @property
    def weight(self) -> Fraction:
        return Fraction(1, self.multiplicity)


def _check_dim(dim: int) -> None:
    if dim not in (2, 3):
        raise ValueError(f"dim must be 2 or 3, got {dim}")


def _check_n(n: int, minimum: int = 1) -> None:
    if int(n) != n or n < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {n}")


@dataclass(frozen=True)
class GeneratorMatrix:
    """Integer lattice generator; columns span the lattice ``M Z^d``."""

    entries: tuple[tuple[int, ...], ...]
    n: int | None = None

    @classmethod
    def rhombus(cls, n: int) -> GeneratorMatrix:
        return cls(((n, n), (-n, n)), n)

    @classmethod
    def fcc(cls, n: int) -> GeneratorMatrix:
        return cls(((0, n, n), (n, 0, n), (n, n, 0)), n)

    @classmethod
    def for_dim(cls, dim: int, n: int) -> GeneratorMatrix:
        _check_dim(dim)
        return cls.rhombus(n) if dim == 2 else cls.fcc(n)

    @classmethod
    def scaled_identity(cls, dim: int, scale: int) -> GeneratorMatrix:
        _check_dim(dim)
        return cls(tuple(tuple(scale if i == j else 0 for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @property
    def det(self) -> int:
        return int(round(np.linalg.det(self.array)))

    @property
    def transpose(self) -> GeneratorMatrix:
        return GeneratorMatrix(tuple(zip(*self.entries)), self.n)

    def adjugate(self) -> np.ndarray:
        # det * M^{-1}; exact for the small integer matrices used here
        return np.rint(np.linalg.inv(self.array) * self.det).astype(np.int64)

    def coset_key(self, v: np.ndarray) -> np.ndarray:
        """Canonical representative of ``v + M Z^d`` (rows of ``v``)."""
        v = np.asarray(v, dtype=np.int64)
        det = self.det
        coords = v @ self.adjugate().T
        if det < 0:
            coords, det = -coords, -det
        return v - np.floor_divide(coords, det) @ self.array.T

    def contains(self, v: np.ndarray) -> np.ndarray:
        """True where the rows of ``v`` lie in ``M Z^d``."""
        key = self.coset_key(np.atleast_2d(v))
        return np.all(key == 0, axis=-1)


def _box(lo: int, hi: int, dim: int) -> np.ndarray:
    pts = np.array(list(itertools.product(range(lo, hi + 1), repeat=dim)), dtype=np.int64)
    return pts.reshape(-1, dim)


def _parity_grid(dim: int, n: int, closed: bool) -> np.ndarray:
    # {2k : -n/2 <= k_i (<= or <) n/2} U {2k+1 : -(n+1)/2 <= k_i (<= or <) (n-1)/2}
    pts = _box(-n - 1, n + 1, dim)
    even = np.all(pts % 2 == 0, axis=1)
    odd = np.all(pts % 2 == 1, axis=1)
    # 2k >= -n  and  2k+1 >= -n  are the lower bounds in both cases
    lower = np.all(pts >= -n, axis=1)
    upper = np.all(pts <= n, axis=1) if closed else np.all(pts < n, axis=1)
    return pts[(even | odd) & lower & upper]


def _pair_forms(pts: np.ndarray) -> np.ndarray:
    """All ``j_a + j_b`` and ``j_a - j_b`` for a < b, stacked as columns."""
    dim = pts.shape[1]
    cols = []
    for a, b in itertools.combinations(range(dim), 2):
        cols.append(pts[:, a] + pts[:, b])
        cols.append(pts[:, a] - pts[:, b])
    return np.stack(cols, axis=1)


@lru_cache(maxsize=256)
def _generate(kind: IndexSetKind, dim: int, n: int) -> np.ndarray:
    if kind is IndexSetKind.X:
        return _parity_grid(dim, n, closed=False)
    if kind is IndexSetKind.X_STAR:
        return _parity_grid(dim, n, closed=True)
    if kind in (IndexSetKind.XI, IndexSetKind.XI_INTERIOR):
        pts = _box(0, n, dim)
        same_parity = np.all(pts % 2 == 0, axis=1) | np.all(pts % 2 == 1, axis=1)
        pts = pts[same_parity]
        if kind is IndexSetKind.XI_INTERIOR:
            pts = pts[np.all((pts > 0) & (pts < n), axis=1)]
        return pts

    if dim == 2:
        pts = _box(-n, n, 2)
        s, d = pts[:, 0] + pts[:, 1], pts[:, 1] - pts[:, 0]
        if kind is IndexSetKind.LAMBDA:
            keep = (-n <= s) & (s < n) & (-n <= d) & (d < n)
        elif kind is IndexSetKind.LAMBDA_STAR:
            keep = (np.abs(s) <= n) & (np.abs(d) <= n)
        else:
            raise ValueError(f"{kind.value} is not defined for dim=2 (Lambda-dag coincides with Lambda)")
        return pts[keep]

    pts = _box(-n, n, 3)
    if kind in (IndexSetKind.LAMBDA, IndexSetKind.LAMBDA_STAR):
        j1, j2, j3 = pts.T
        forms = np.stack([-j1 + j2 + j3, j1 - j2 + j3, j1 + j2 - j3], axis=1)
    else:
        forms = _pair_forms(pts)
    if kind in (IndexSetKind.LAMBDA, IndexSetKind.LAMBDA_DAG):
        keep = np.all((forms >= -n) & (forms < n), axis=1)
    else:
        keep = np.all(np.abs(forms) <= n, axis=1)
    return pts[keep]


def generate_index_set(kind: IndexSetKind | str, dim: int, n: int) -> np.ndarray:
    """Integer points of the named index set as a read-only ``(N, dim)`` array.

    The half-open bounds of Lambda, Lambda-dag and X are kept exactly so that
    these sets are transversals of the corresponding tilings.
    """
    kind = IndexSetKind(kind) if isinstance(kind, str) else kind
    _check_dim(dim)
    _check_n(n, 0 if kind in (IndexSetKind.LAMBDA_STAR, IndexSetKind.LAMBDA_DAG_STAR) else 1)
    out = _generate(kind, dim, int(n))
    out.flags.writeable = False
    return out


def xi_count(dim: int, n: int) -> int:
    """Closed-form size of Xi_n."""
    _check_dim(dim)
    if dim == 2:
        return n * (n + 1) // 2 + n // 2 + 1
    return (n // 2 + 1) ** 3 + ((n - 1) // 2 + 1) ** 3


def xi_interior_count(dim: int, n: int) -> int:
    _check_dim(dim)
    return (n // 2) ** dim + ((n - 1) // 2) ** dim


def _as_index(k, dim: int) -> tuple[int, ...]:
    k = tuple(int(v) for v in np.asarray(k).ravel())
    if len(k) != dim:
        raise ValueError(f"expected a {dim}-dimensional index, got {k}")
    return k


@lru_cache(maxsize=256)
def _member_set(kind: IndexSetKind, dim: int, n: int) -> frozenset:
    return frozenset(map(tuple, _generate(kind, dim, n).tolist()))


_SPATIAL_KINDS = {
    2: {0: BoundaryKind.INTERIOR, 1: BoundaryKind.EDGE, 2: BoundaryKind.VERTEX},
    3: {0: BoundaryKind.INTERIOR, 1: BoundaryKind.FACE, 2: BoundaryKind.EDGE, 3: BoundaryKind.VERTEX},
}


def classify_spatial(k, dim: int, n: int) -> BoundaryClass:
    """Boundary class of ``k`` in X*_n; multiplicity is ``2**(#coords at +-n)``."""
    _check_dim(dim)
    k = _as_index(k, dim)
    if k not in _member_set(IndexSetKind.X_STAR, dim, n):
        raise ValueError(f"{k} is not in X*_{n} (dim={dim})")
    on_edge = sum(abs(v) == n for v in k)
    return BoundaryClass(_SPATIAL_KINDS[dim][on_edge], 2**on_edge)


_FREQUENCY_KINDS = {
    1: BoundaryKind.INTERIOR,
    2: BoundaryKind.FACE,
    3: BoundaryKind.EDGE,
    4: BoundaryKind.VERTEX,
    6: BoundaryKind.VERTEX,
}


def _frequency_set_kind(dim: int) -> IndexSetKind:
    return IndexSetKind.LAMBDA_STAR if dim == 2 else IndexSetKind.LAMBDA_DAG_STAR


@lru_cache(maxsize=128)
def _frequency_multiplicities(dim: int, n: int) -> dict[tuple[int, ...], int]:
    pts = _generate(_frequency_set_kind(dim), dim, n)
    keys = [tuple(r) for r in GeneratorMatrix.for_dim(dim, n).transpose.coset_key(pts).tolist()]
    counts = Counter(keys)
    return {tuple(p): counts[key] for p, key in zip(pts.tolist(), keys)}


def classify_frequency(j, dim: int, n: int) -> BoundaryClass:
    """Boundary class of a frequency in the symmetric spectral set.

    The multiplicity is the number of points of Lambda*_n (2D) or
    Lambda-dag*_n (3D) congruent to ``j`` modulo ``B^T Z^d``.
    """
    _check_dim(dim)
    j = _as_index(j, dim)
    mult = _frequency_multiplicities(dim, int(n)).get(j)
    if mult is None:
        raise ValueError(f"{j} is not in the symmetric frequency set for n={n} (dim={dim})")
    # in 2D the boundary elements of the rhombus are edges and vertices only
    kind = BoundaryKind.EDGE if (dim == 2 and mult == 2) else _FREQUENCY_KINDS[mult]
    return BoundaryClass(kind, mult)


def congruence_class(k, points: np.ndarray, lattice: GeneratorMatrix) -> np.ndarray:
    """Members of ``points`` congruent to ``k`` modulo ``lattice`` (``k`` included)."""
    points = np.asarray(points, dtype=np.int64)
    k = np.asarray(k, dtype=np.int64).ravel()
    if not np.any(np.all(points == k, axis=1)):
        raise ValueError(f"{tuple(k)} is not a member of the given set")
    return points[lattice.contains(points - k)]


def spatial_weights(dim: int, n: int) -> list[Fraction]:
    """``c_k`` for every k in X*_n, aligned with ``generate_index_set(X_STAR)``."""
    return [classify_spatial(k, dim, n).weight for k in generate_index_set(IndexSetKind.X_STAR, dim, n)]


def frequency_weights(dim: int, n: int) -> list[Fraction]:
    """``c-hat`` (2D) / ``mu`` (3D) aligned with the symmetric frequency set."""
    mults = _frequency_multiplicities(dim, int(n))
    pts = generate_index_set(_frequency_set_kind(dim), dim, n)
    return [Fraction(1, mults[tuple(p)]) for p in pts.tolist()]


def frequency_weight_array(dim: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Frequencies and their weights as float arrays, for kernel evaluation."""
    pts = generate_index_set(_frequency_set_kind(dim), dim, n)
    mults = _frequency_multiplicities(dim, int(n))
    return pts, np.array([1.0 / mults[tuple(p)] for p in pts.tolist()])


def lambda_weight(k, dim: int, n: int) -> Fraction:
    """Algebraic cubature weight of k in Xi_n.

    Equal to the size of the sign orbit of ``k`` times ``c_k``, which reduces
    to ``2**(dim - #{i : k_i in {0, n}})``.
    """
    k = _as_index(k, dim)
    if k not in _member_set(IndexSetKind.XI, dim, n):
        raise ValueError(f"{k} is not in Xi_{n} (dim={dim})")
    orbit = 2 ** sum(v != 0 for v in k)
    return orbit * classify_spatial(k, dim, n).weight


def orthogonality_value(index, dim: int, n: int, side: str = "spatial") -> complex:
    """Normalized exponential sum over Lambda_B (spatial) or Lambda_B-dag (frequency)."""
    _check_dim(dim)
    idx = np.asarray(_as_index(index, dim), dtype=float)
    B = GeneratorMatrix.for_dim(dim, n)
    binv_t = np.linalg.inv(B.array.astype(float)).T
    if side == "spatial":
        pts = generate_index_set(IndexSetKind.LAMBDA, dim, n)
        phase = (pts @ binv_t.T) @ idx
        terms = np.exp(2j * np.pi * phase)
    elif side == "frequency":
        kind = IndexSetKind.LAMBDA if dim == 2 else IndexSetKind.LAMBDA_DAG
        pts = generate_index_set(kind, dim, n)
        phase = pts @ (binv_t @ idx)
        terms = np.exp(-2j * np.pi * phase)
    else:
        raise ValueError(f"side must be 'spatial' or 'frequency', got {side!r}")
    return complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist())) / abs(B.det)


def orthogonality_sum(index, dim: int, n: int, side: str = "spatial") -> int:
    """1 if ``index`` is congruent to 0 modulo B (spatial) or B^T (frequency), else 0.

    The exact lattice test is cross-checked against the floating-point sum,
    which must round to the same value.
    """
    B = GeneratorMatrix.for_dim(dim, n)
    lattice = B if side == "spatial" else B.transpose
    exact = int(lattice.contains(np.asarray(_as_index(index, dim)))[0])
    value = orthogonality_value(index, dim, n, side)
    if abs(value - exact) > 1e-8:
        raise ArithmeticError(f"exponential sum {value} disagrees with lattice test {exact}")
    return exact
