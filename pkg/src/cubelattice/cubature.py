"""Trigonometric and algebraic cubature rules on the square and the cube."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from cubelattice.lattice_core import (
    IndexSetKind,
    generate_index_set,
    lambda_weight,
    spatial_weights,
)
from cubelattice.transform import chebyshev_grid

WEIGHT_KINDS = ("trig_sym", "trig_equal", "W0", "W1")


class IntegrandError(RuntimeError):
    """An integrand failed at a specific node."""


@dataclass(frozen=True)
class Exactness:
    """Set of multi-indices a rule integrates exactly.

    ``kind`` is one of
      - ``"total"``: ``sum(m) <= bound`` (algebraic, 2D),
      - ``"pairwise"``: ``m_a + m_b <= bound`` for all a < b (algebraic, 3D),
      - ``"rhombus"``: frequencies with ``|j1| + |j2| <= bound``,
      - ``"dodecahedron"``: frequencies with ``|j_a| + |j_b| <= bound``.
    """

    kind: str
    bound: int

    def contains(self, m) -> bool:
        m = [int(v) for v in m]
        if self.kind == "total":
            return all(v >= 0 for v in m) and sum(m) <= self.bound
        if self.kind == "pairwise":
            return all(v >= 0 for v in m) and all(
                m[a] + m[b] <= self.bound for a in range(len(m)) for b in range(a + 1, len(m))
            )
        if self.kind == "rhombus":
            return abs(m[0]) + abs(m[1]) <= self.bound
        if self.kind == "dodecahedron":
            return all(abs(m[a]) + abs(m[b]) <= self.bound for a in range(3) for b in range(a + 1, 3))
        raise ValueError(f"unknown exactness kind {self.kind!r}")

    def describe(self) -> str:
        return f"{self.kind}<={self.bound}"

    @classmethod
    def parse(cls, text: str) -> Exactness:
        kind, bound = text.split("<=")
        return cls(kind, int(bound))


@dataclass(frozen=True)
class CubatureRule:
    """Materialized rule ``normalization * sum_i weights[i] * f(nodes[i])``.

    ``indices`` are the integer multi-indices the nodes come from (``k`` with
    node ``k/2n`` for trig rules, ``k`` with node ``cos(k pi/n)`` for W0/W1).
    Weights are exact Fractions except for W1, whose ``sin^2`` weights are floats.
    """

    dim: int
    n: int
    weight_kind: str
    indices: np.ndarray
    nodes: np.ndarray
    weights: tuple
    normalization: Fraction
    exactness: Exactness
    _weight_array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.weight_kind not in WEIGHT_KINDS:
            raise ValueError(f"unknown weight kind {self.weight_kind!r}")
        if not (len(self.nodes) == len(self.weights) == len(self.indices)):
            raise ValueError("nodes, weights and indices must align")
        if any(w <= 0 for w in self.weights):
            raise ValueError("cubature weights must be positive")
        object.__setattr__(self, "_weight_array", np.array([float(w) for w in self.weights]))

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def weight_array(self) -> np.ndarray:
        return self._weight_array

    @property
    def total_mass(self) -> Fraction | float:
        if all(isinstance(w, Fraction) for w in self.weights):
            return self.normalization * sum(self.weights, Fraction(0))
        return float(self.normalization) * math.fsum(self.weights)


def _check_n(n: int, minimum: int, what: str) -> None:
    if int(n) != n or n < minimum:
        raise ValueError(f"{what} needs n >= {minimum}, got {n}")


def trig_rule(dim: int, n: int, variant: str = "symmetric") -> CubatureRule:
    """Rule for ``int_{[-1/2,1/2]^d} f``, exact on exponentials up to 2n-1.

    ``symmetric`` uses X*_n with boundary weights ``c_k``; ``equal_weight``
    uses the half-open X_n with unit weights.
    """
    _check_n(n, 2, "trig_rule")
    if variant == "symmetric":
        idx = generate_index_set(IndexSetKind.X_STAR, dim, n)
        weights = tuple(spatial_weights(dim, n))
        kind = "trig_sym"
    elif variant == "equal_weight":
        idx = generate_index_set(IndexSetKind.X, dim, n)
        weights = (Fraction(1),) * len(idx)
        kind = "trig_equal"
    else:
        raise ValueError(f"variant must be 'symmetric' or 'equal_weight', got {variant!r}")
    exact = Exactness("rhombus" if dim == 2 else "dodecahedron", 2 * n - 1)
    return CubatureRule(dim, n, kind, idx, idx / (2.0 * n), weights, Fraction(1, 2 * n**dim), exact)


def w0_rule(dim: int, n: int) -> CubatureRule:
    """Rule for ``pi^-d int f W0`` on nodes ``cos(k pi/n)``, ``k`` in Xi_n."""
    _check_n(n, 2, "w0_rule")
    idx = generate_index_set(IndexSetKind.XI, dim, n)
    weights = tuple(lambda_weight(k, dim, n) for k in idx)
    norm = Fraction(1, 2 * n**dim)
    if norm * sum(weights) != 1:
        raise ArithmeticError("W0 weights do not sum to 2 n^d")
    exact = Exactness("total" if dim == 2 else "pairwise", 2 * n - 1)
    return CubatureRule(dim, n, "W0", idx, chebyshev_grid(idx, n), weights, norm, exact)


def w1_rule(dim: int, n: int) -> CubatureRule:
    """Rule for ``pi^-d int f W1`` on the interior nodes, weights ``prod sin^2(k_i pi/n)``."""
    _check_n(n, 3, "w1_rule")
    idx = generate_index_set(IndexSetKind.XI_INTERIOR, dim, n)
    weights = tuple(float(w) for w in np.prod(np.sin(idx * np.pi / n) ** 2, axis=1))
    norm = Fraction(2, n**2) if dim == 2 else Fraction(4, n**3)
    exact = Exactness("total" if dim == 2 else "pairwise", 2 * n - 5)
    return CubatureRule(dim, n, "W1", idx, chebyshev_grid(idx, n), weights, norm, exact)


def make_rule(dim: int, n: int, rule: str) -> CubatureRule:
    """Look up a rule by its CLI name (``trig-sym``, ``trig-equal``, ``w0``, ``w1``)."""
    if rule == "trig-sym":
        return trig_rule(dim, n, "symmetric")
    if rule == "trig-equal":
        return trig_rule(dim, n, "equal_weight")
    if rule == "w0":
        return w0_rule(dim, n)
    if rule == "w1":
        return w1_rule(dim, n)
    raise ValueError(f"unknown rule {rule!r}")


def _compensated(values: np.ndarray) -> complex | float:
    if np.iscomplexobj(values):
        return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))
    return math.fsum(values.tolist())


def apply(rule: CubatureRule, f: Callable, vectorized: bool = False):
    """``normalization * sum w_i f(node_i)`` with correctly rounded summation.

    With ``vectorized=True`` the integrand is called once on the ``(N, d)``
    node array; otherwise once per node with a length-d array.
    """
    if vectorized:
        values = np.asarray(f(rule.nodes))
        if values.shape != (len(rule),):
            raise IntegrandError(f"vectorized integrand returned shape {values.shape}, expected {(len(rule),)}")
    else:
        out = []
        for k, node in zip(rule.indices, rule.nodes):
            try:
                out.append(f(node))
            except Exception as exc:
                raise IntegrandError(f"integrand failed at node index {tuple(int(v) for v in k)}") from exc
        values = np.asarray(out)
    total = _compensated(rule.weight_array * values)
    return total * float(rule.normalization)


def w0_split_sum(n: int, f: Callable[[float, float], float]) -> float:
    """The 2D W0 rule written as two product sums over the even and odd sublattices.

    For ``n = 2m`` both endpoints of the even-index sums are halved; for
    ``n = 2m + 1`` only the first term of each sum is halved and the odd
    sublattice is indexed as ``n - 2i``.
    """
    _check_n(n, 2, "w0_split_sum")
    z = lambda k: float(chebyshev_grid(k, n))  # noqa: E731
    m, odd = divmod(n, 2)
    terms = []
    if not odd:
        half = lambda i: 0.5 if i in (0, m) else 1.0  # noqa: E731
        for i in range(m + 1):
            for j in range(m + 1):
                terms.append(half(i) * half(j) * f(z(2 * i), z(2 * j)))
        for i in range(m):
            for j in range(m):
                terms.append(f(z(2 * i + 1), z(2 * j + 1)))
    else:
        first = lambda i: 0.5 if i == 0 else 1.0  # noqa: E731
        for i in range(m + 1):
            for j in range(m + 1):
                terms.append(first(i) * first(j) * f(z(2 * i), z(2 * j)))
                terms.append(first(i) * first(j) * f(z(n - 2 * i), z(n - 2 * j)))
    return 2.0 / n**2 * math.fsum(terms)
