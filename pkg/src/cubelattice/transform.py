"""Changes of variables and Chebyshev polynomial evaluation."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Chart(enum.Enum):
    TORUS = "torus"  # x in [-1/2, 1/2]^d
    ALGEBRAIC = "algebraic"  # t in [-1, 1]^d


@dataclass(frozen=True)
class CubePoint:
    """Coordinates tagged with their chart, so the cosine map cannot be applied twice."""

    coords: tuple[float, ...]
    chart: Chart

    def __post_init__(self):
        bound = 0.5 if self.chart is Chart.TORUS else 1.0
        if len(self.coords) not in (2, 3):
            raise ValueError(f"expected 2 or 3 coordinates, got {len(self.coords)}")
        if any(abs(c) > bound for c in self.coords):
            raise ValueError(f"{self.coords} lies outside the {self.chart.value} box")

    @classmethod
    def torus(cls, *x: float) -> CubePoint:
        return cls(tuple(float(v) for v in x), Chart.TORUS)

    @classmethod
    def algebraic(cls, *t: float) -> CubePoint:
        return cls(tuple(float(v) for v in t), Chart.ALGEBRAIC)


def cos_chart(x) -> np.ndarray:
    """Array form of the cosine map, ``t_i = cos(2 pi x_i)``."""
    return np.cos(2 * np.pi * np.asarray(x, dtype=float))


def cosine_map(p: CubePoint) -> CubePoint:
    if p.chart is not Chart.TORUS:
        raise ValueError("cosine_map expects a point in the torus chart")
    return CubePoint(tuple(float(v) for v in cos_chart(p.coords)), Chart.ALGEBRAIC)


def chebyshev_grid(k, n: int) -> np.ndarray:
    """``cos(k pi / n)`` evaluated as ``sin(pi (n - 2k) / (2n))``.

    The sine form returns exact zeros and exactly antisymmetric values.
    """
    k = np.asarray(k, dtype=float)
    return np.sin(np.pi * (n - 2 * k) / (2 * n))


def index_map_2d(j) -> tuple[int, int]:
    """Lambda_n -> X_n, ``k = (j1 + j2, j2 - j1)``."""
    j1, j2 = (int(v) for v in j)
    return (j1 + j2, j2 - j1)


def index_map_2d_inverse(k) -> tuple[int, int]:
    k1, k2 = (int(v) for v in k)
    if (k1 + k2) % 2:
        raise ValueError(f"{(k1, k2)} has odd coordinate sum; no integer preimage")
    return ((k1 - k2) // 2, (k1 + k2) // 2)


def index_map_3d(j) -> tuple[int, int, int]:
    """Lambda_n -> X_n, ``k = 2n B^{-T} j`` for the fcc generator."""
    j1, j2, j3 = (int(v) for v in j)
    return (-j1 + j2 + j3, j1 - j2 + j3, j1 + j2 - j3)


def index_map_3d_inverse(k) -> tuple[int, int, int]:
    k1, k2, k3 = (int(v) for v in k)
    if not (k1 % 2 == k2 % 2 == k3 % 2):
        raise ValueError(f"{(k1, k2, k3)} mixes parities; no integer preimage")
    return ((k2 + k3) // 2, (k1 + k3) // 2, (k1 + k2) // 2)


_TO_HOM = 0.5 * np.array([[-1, 1, 1], [1, -1, 1], [1, 1, -1], [-1, -1, -1]], dtype=float)
_FROM_HOM = np.array([[0, 1, 1, 0], [1, 0, 1, 0], [1, 1, 0, 0]], dtype=float)


@dataclass(frozen=True)
class HomogeneousPoint:
    t: tuple[float, float, float, float]

    def __post_init__(self):
        if len(self.t) != 4:
            raise ValueError("homogeneous points have 4 coordinates")
        if abs(sum(self.t)) > 1e-14 * max(1.0, max(abs(v) for v in self.t)):
            raise ValueError(f"coordinates {self.t} do not sum to zero")

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.t, dtype=dtype)


def to_homogeneous(x) -> np.ndarray:
    """Torus point(s) of shape (..., 3) to zero-sum 4-vectors of shape (..., 4)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise ValueError("homogeneous coordinates are defined for dim=3 only")
    return x @ _TO_HOM.T


def from_homogeneous(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return t @ _FROM_HOM.T


def hom_index_map(k) -> tuple[int, int, int, int]:
    """Frequency in Lambda-dag* to its homogeneous index in G_n."""
    k1, k2, k3 = (int(v) for v in k)
    return (
        2 * (-k1 + k2 + k3),
        2 * (k1 - k2 + k3),
        2 * (k1 + k2 - k3),
        2 * (-k1 - k2 - k3),
    )


def chebyshev_eval(kind: str, degree: int, t) -> np.ndarray | float:
    """``T_m(t) = cos(m theta)`` or ``U_m(t) = sin((m+1) theta) / sin(theta)``, ``t = cos(theta)``."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    t_arr = np.asarray(t, dtype=float)
    if np.any(np.abs(t_arr) > 1.0):
        raise ValueError("Chebyshev evaluation is restricted to |t| <= 1")
    theta = np.arccos(t_arr)
    if kind == "first":
        out = np.cos(degree * theta)
    elif kind == "second":
        out = sin_ratio(degree + 1, theta)
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    return float(out) if out.ndim == 0 else out


def sin_ratio(m: int, phi, threshold: float = 1e-8) -> np.ndarray:
    """``sin(m phi) / sin(phi)`` with its limit at multiples of pi.

    Near ``phi = P pi`` the ratio is ``(-1)**((m-1) P) * sin(m e) / sin(e)``
    with ``e = phi - P pi``; below ``threshold`` the two-term Taylor form is used.
    """
    phi = np.asarray(phi, dtype=float)
    s = np.sin(phi)
    near = np.abs(s) < threshold
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin(m * phi) / s
    if not np.any(near):
        return direct
    P = np.rint(phi / np.pi)
    eps = phi - P * np.pi
    sign = np.where(((m - 1) * P) % 2 == 0, 1.0, -1.0)
    limit = sign * m * (1.0 - (m * m - 1) * eps * eps / 6.0)
    return np.where(near, limit, direct)
