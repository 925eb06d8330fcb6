"""Verification batteries shared by the CLI and the acceptance tests.

Each check yields a :class:`CheckResult`. Expected-failure checks record a
known non-exactness witness; they are satisfied when the deviation exceeds
their ``tolerance`` and are unexpected otherwise.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from cubelattice import kernels, oracle
from cubelattice.cubature import apply, trig_rule, w0_rule, w1_rule
from cubelattice.interpolation import (
    algebraic_interpolant,
    chebyshev_series,
    fundamental_matrix,
    lagrange_coefficients,
    random_space_element,
    space_index_set,
    sym_trig_interpolant,
)
from cubelattice.lattice_core import GeneratorMatrix, IndexSetKind, generate_index_set
from cubelattice.transform import chebyshev_eval, to_homogeneous

SUITES = ("exactness", "kernels", "interpolation")


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    tolerance_scale: float = 1.0
    kernel_probes: int = 200
    trig_samples_3d: int = 500
    interp_probes: int = 100
    space_trials: int = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_error: float
    tolerance: float
    expected_fail: bool = False
    passed: bool = field(init=False)

    def __post_init__(self):
        if self.expected_fail:
            ok = self.max_error > self.tolerance
        else:
            ok = bool(self.max_error <= self.tolerance)
        object.__setattr__(self, "passed", ok)

    @property
    def unexpected(self) -> bool:
        return not self.passed

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _rng(cfg: VerifyConfig, *tag: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, *tag])


def _product_values(kind: str, multi, pts: np.ndarray) -> np.ndarray:
    out = np.ones(len(pts))
    for axis, m in enumerate(multi):
        out = out * chebyshev_eval(kind, int(m), pts[:, axis])
    return out


def _multi_indices(dim: int, bound: int, pairwise: bool):
    for m in itertools.product(range(bound + 1), repeat=dim):
        if pairwise and dim == 3:
            if m[0] + m[1] <= bound and m[0] + m[2] <= bound and m[1] + m[2] <= bound:
                yield m
        elif sum(m) <= bound:
            yield m


def algebraic_exactness_error(dim: int, n: int, weight: str) -> float:
    """Max deviation from the exact moment over the rule's exactness set."""
    rule = w0_rule(dim, n) if weight == "W0" else w1_rule(dim, n)
    kind = "first" if weight == "W0" else "second"
    worst = 0.0
    for m in _multi_indices(dim, rule.exactness.bound, pairwise=True):
        value = apply(rule, lambda p, m=m: _product_values(kind, m, p), vectorized=True)
        worst = max(worst, abs(value - float(oracle.exact_moment(weight, m))))
    return worst


def w0_witness_error(n: int) -> float:
    """3D W0 rule on ``T_n(t1) T_n(t2)``, which lies outside its exactness set."""
    rule = w0_rule(3, n)
    value = apply(rule, lambda p: _product_values("first", (n, n, 0), p), vectorized=True)
    return abs(value - float(oracle.exact_moment("W0", (n, n, 0))))


def trig_frequencies(dim: int, n: int, cfg: VerifyConfig) -> np.ndarray:
    """Λ*_{2n-1} exhaustively in 2D; a seeded sample of the 3D analogue."""
    kind = IndexSetKind.LAMBDA_STAR if dim == 2 else IndexSetKind.LAMBDA_DAG_STAR
    freqs = generate_index_set(kind, dim, 2 * n - 1)
    if dim == 3 and len(freqs) > cfg.trig_samples_3d:
        pick = _rng(cfg, 5, n).choice(len(freqs), cfg.trig_samples_3d, replace=False)
        freqs = np.vstack([np.zeros((1, 3), dtype=freqs.dtype), freqs[np.sort(pick)]])
    return freqs


def trig_exactness_error(dim: int, n: int, variant: str, cfg: VerifyConfig = VerifyConfig()) -> float:
    rule = trig_rule(dim, n, variant)
    worst = 0.0
    for j in trig_frequencies(dim, n, cfg):
        value = apply(rule, lambda x, j=j: np.exp(2j * np.pi * (x @ j)), vectorized=True)
        worst = max(worst, abs(value - (1.0 if not np.any(j) else 0.0)))
    return worst


def exactness_suite(dim: int, ns, cfg: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    s = cfg.tolerance_scale
    tol = (1e-12 if dim == 2 else 1e-11) * s
    out = []
    for n in ns:
        if n >= 2:
            out.append(CheckResult(f"exactness/W0/dim={dim}/n={n}", algebraic_exactness_error(dim, n, "W0"), tol))
            for variant in ("symmetric", "equal_weight"):
                err = trig_exactness_error(dim, n, variant, cfg)
                out.append(CheckResult(f"exactness/trig-{variant}/dim={dim}/n={n}", err, 1e-12 * s))
        if n >= 3:
            out.append(CheckResult(f"exactness/W1/dim={dim}/n={n}", algebraic_exactness_error(dim, n, "W1"), tol))
        if dim == 3 and n in (2, 3):
            out.append(CheckResult(f"exactness/W0-witness-TnTn/dim=3/n={n}", w0_witness_error(n), 1e-3, expected_fail=True))
    return out


# -- kernels ------------------------------------------------------------------


def _relative(a, b) -> float:
    b = np.asarray(b)
    scale = max(1.0, float(np.max(np.abs(b))))
    return float(np.max(np.abs(np.asarray(a) - b))) / scale


def singular_probes(dim: int, n: int) -> np.ndarray:
    """Node differences, the origin, and points on the ratio forms' singular sets."""
    nodes = generate_index_set(IndexSetKind.X_STAR, dim, n) / (2.0 * n)
    pts = [nodes, np.zeros((1, dim))]
    u = np.linspace(-0.5, 0.5, 11)
    if dim == 2:
        pts += [np.stack([u, u], 1), np.stack([u, -u], 1), np.stack([u, 0.5 - np.abs(u)], 1)]
    else:
        # t_j integral on these lines
        pts += [np.stack([u, u, u], 1), np.stack([u, -u, 0 * u], 1), np.stack([u, u, 0 * u], 1)]
    return np.vstack(pts)


def kernel_errors(dim: int, n: int, cfg: VerifyConfig = VerifyConfig()) -> dict[str, tuple[float, float]]:
    """``{kernel: (random-probe relative error, singular-probe absolute error)}``."""
    rng = _rng(cfg, 7, dim, n)
    x = rng.uniform(-0.5, 0.5, (cfg.kernel_probes, dim))
    sing = singular_probes(dim, n)
    out = {}

    def record(name, fast, oracle_id, pts_random=x, pts_sing=sing):
        rand = _relative(fast(pts_random), oracle.direct_kernel_sum(oracle_id, n, pts_random).real)
        s = float(np.max(np.abs(fast(pts_sing) - oracle.direct_kernel_sum(oracle_id, n, pts_sing).real)))
        out[name] = (rand, s)

    if dim == 2:
        record("dirichlet_2d", lambda p: kernels.dirichlet_2d(n, p), "dirichlet_2d")
        record("phi_star_2d", lambda p: kernels.phi_star_2d(n, p), "phi_star_2d")
    else:
        record("dn_3d_x", lambda p: kernels.dn_3d_x(n, p), "dn_3d")
        record("dn_3d_hom", lambda p: kernels.dn_3d_x(n, p), "dn_3d_hom")
        record("phi_star_3d", lambda p: kernels.phi_star_3d(n, p), "phi_star_3d")
        record(
            "odd_part",
            lambda p: kernels.odd_part(n, p),
            "odd_part_hom",
            to_homogeneous(x),
            to_homogeneous(sing),
        )
    return out


def kernel_suite(dim: int, ns, cfg: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    s = cfg.tolerance_scale
    out = []
    for n in ns:
        if n < 1:
            continue
        for name, (rand, sing) in kernel_errors(dim, n, cfg).items():
            out.append(CheckResult(f"kernels/{name}/dim={dim}/n={n}/random", rand, 1e-9 * s))
            out.append(CheckResult(f"kernels/{name}/dim={dim}/n={n}/singular", sing, 1e-10 * s))
    return out


# -- interpolation ------------------------------------------------------------


def delta_error(dim: int, n: int) -> float:
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    mat = fundamental_matrix(dim, n, nodes / (2.0 * n))
    return float(np.max(np.abs(mat - np.eye(len(nodes)))))


def partition_error(dim: int, n: int, cfg: VerifyConfig = VerifyConfig()) -> float:
    x = _rng(cfg, 11, dim, n).uniform(-0.5, 0.5, (cfg.interp_probes, dim))
    return float(np.max(np.abs(fundamental_matrix(dim, n, x).sum(axis=1) - 1.0)))


def trig_delta_error(dim: int, n: int) -> float:
    """``Phi_n((j - k)/2n)`` over all node pairs of X_n, against the identity."""
    nodes = generate_index_set(IndexSetKind.X, dim, n)
    diff = (nodes[:, None, :] - nodes[None, :, :]) / (2.0 * n)
    return float(np.max(np.abs(kernels.phi(dim, n, diff) - np.eye(len(nodes)))))


def boundary_sum_error(dim: int, n: int, cfg: VerifyConfig = VerifyConfig()) -> float:
    """``I*_n f(j/2n)`` against the sum of samples over the nodes congruent to ``j`` mod 2n."""
    nodes = generate_index_set(IndexSetKind.X_STAR, dim, n)
    values = _rng(cfg, 13, dim, n).standard_normal(len(nodes))
    samples = {tuple(int(v) for v in k): float(f) for k, f in zip(nodes, values)}
    got = sym_trig_interpolant(dim, n, samples).evaluate(nodes / (2.0 * n))
    keys = GeneratorMatrix.scaled_identity(dim, 2 * n).coset_key(nodes)
    expected = np.array([values[np.all(keys == key, axis=1)].sum() for key in keys])
    return float(np.max(np.abs(got - expected)))


def space_reproduction_error(dim: int, n: int, cfg: VerifyConfig = VerifyConfig()) -> float:
    rng = _rng(cfg, 17, dim, n)
    worst = 0.0
    for _ in range(cfg.space_trials):
        coef = random_space_element(dim, n, rng)
        t = rng.uniform(-1.0, 1.0, (cfg.interp_probes, dim))
        exact = chebyshev_series(coef, t)
        approx = algebraic_interpolant(dim, n, lambda p: float(chebyshev_series(coef, p))).evaluate(t)
        worst = max(worst, _relative(approx, exact))
    return worst


def space_membership_error(dim: int, n: int, cfg: VerifyConfig = VerifyConfig()) -> float:
    """Largest product-Chebyshev coefficient of an interpolant outside the space's index set."""
    rng = _rng(cfg, 19, dim, n)
    nodes = generate_index_set(IndexSetKind.XI, dim, n)
    samples = {tuple(int(v) for v in k): float(f) for k, f in zip(nodes, rng.standard_normal(len(nodes)))}
    interp = algebraic_interpolant(dim, n, samples)
    coeffs = oracle.coefficient_extract(interp.evaluate, dim, 4 * n)
    outside = [abs(c) for m, c in coeffs.items() if not space_index_set(dim, n, m)]
    inside = lagrange_coefficients(dim, n, interp)
    # the kernel path and coefficient path must agree inside the index set
    agree = max(abs(c - inside[m]) for m, c in coeffs.items() if space_index_set(dim, n, m))
    return max(max(outside, default=0.0), agree)


def interpolation_suite(dim: int, ns, cfg: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    s = cfg.tolerance_scale
    out = []
    for n in ns:
        if n < 1:
            continue
        out.append(CheckResult(f"interpolation/delta/dim={dim}/n={n}", delta_error(dim, n), 1e-9 * s))
        out.append(CheckResult(f"interpolation/partition/dim={dim}/n={n}", partition_error(dim, n, cfg), 1e-9 * s))
        out.append(CheckResult(f"interpolation/trig-delta/dim={dim}/n={n}", trig_delta_error(dim, n), 1e-10 * s))
        out.append(CheckResult(f"interpolation/boundary-sum/dim={dim}/n={n}", boundary_sum_error(dim, n, cfg), 1e-9 * s))
        out.append(
            CheckResult(f"interpolation/reproduction/dim={dim}/n={n}", space_reproduction_error(dim, n, cfg), 1e-8 * s)
        )
        out.append(
            CheckResult(f"interpolation/membership/dim={dim}/n={n}", space_membership_error(dim, n, cfg), 1e-8 * s)
        )
    return out


def run(suite: str, dims, ns, cfg: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    """Run one suite (or ``all``) and return results in canonical name order."""
    chosen = SUITES if suite == "all" else (suite,)
    table = {"exactness": exactness_suite, "kernels": kernel_suite, "interpolation": interpolation_suite}
    results = []
    for name in chosen:
        if name not in table:
            raise ValueError(f"unknown suite {name!r}")
        for dim in dims:
            results.extend(table[name](dim, ns, cfg))
    return sorted(results, key=lambda r: r.name)
