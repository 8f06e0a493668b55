"""Sampled margins of the strict-inequality class conditions.

Every margin is the minimum over a :class:`DiskGrid` of a quantity that the
class definition requires to be positive on the open disk. A margin below
``-REFUTE_TOL`` refutes membership at the reported witness point; a
positive margin only supports it. ``sufficient_condition_sum`` is the one
sound positive test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from .errors import DegeneratePointError, ParameterError
from .harmonic import EpsilonSample, HarmonicMap
from .series import (
    SERIES_TOL,
    AnalyticSeries,
    check_alpha,
    evaluate,
    multiplier,
    test_operator,
)

REFUTE_TOL = 1e-9
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class DiskGrid:
    """Polar sample of ``|z| <= r_max``.

    Enumeration order: the origin, then rings ``r_j = r_max*j/radial_count``
    (``j = 1..radial_count``) in increasing j, each ring swept over
    ``theta_k = 2*pi*k/angular_count``.
    """

    r_max: float = 0.999
    radial_count: int = 64
    angular_count: int = 720

    def __post_init__(self):
        if not (0.0 < self.r_max < 1.0):
            raise ParameterError(f"r_max must lie in (0, 1), got {self.r_max!r}")
        if self.radial_count < 2:
            raise ParameterError("radial_count must be >= 2")
        if self.angular_count < 8:
            raise ParameterError("angular_count must be >= 8")

    @cached_property
    def radii(self) -> np.ndarray:
        return self.r_max * np.arange(1, self.radial_count + 1) / self.radial_count

    @cached_property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count

    @cached_property
    def points(self) -> np.ndarray:
        ring = np.cos(self.angles) + 1j * np.sin(self.angles)
        pts = np.concatenate([[0j], (self.radii[:, None] * ring[None, :]).ravel()])
        pts.setflags(write=False)
        return pts

    def __len__(self) -> int:
        return 1 + self.radial_count * self.angular_count

    def describe(self) -> dict[str, Any]:
        return {
            "r_max": self.r_max,
            "radial_count": self.radial_count,
            "angular_count": self.angular_count,
        }


@dataclass(frozen=True)
class MarginReport:
    min_value: float
    argmin: complex
    grid: DiskGrid
    quantity: str
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def refuted(self) -> bool:
        return self.min_value < -REFUTE_TOL

    def to_dict(self) -> dict[str, Any]:
        d = {
            "quantity": self.quantity,
            "min_value": self.min_value,
            "argmin": [self.argmin.real, self.argmin.imag],
            "grid": self.grid.describe(),
        }
        d.update(self.extra)
        return d


def _report(values: np.ndarray, points: np.ndarray, grid: DiskGrid, quantity: str, **extra) -> MarginReport:
    # np.argmin returns the first occurrence, which is the tie-break rule
    i = int(np.argmin(values))
    return MarginReport(float(values[i]), complex(points[i]), grid, quantity, dict(extra))


def _require_normalized(F: AnalyticSeries):
    if abs(F[0]) > SERIES_TOL or abs(F[1] - 1.0) > SERIES_TOL:
        raise ParameterError("series must satisfy c_0 = 0 and c_1 = 1")


def w_margin(F: AnalyticSeries, alpha: float, grid: DiskGrid, *, normalized: bool = True) -> MarginReport:
    """Minimum of ``Re(F' + alpha z F'')`` over the grid."""
    if normalized:
        _require_normalized(F)
    T = evaluate(test_operator(F, alpha), grid.points)
    return _report(T.real, grid.points, grid, "w_margin", alpha=alpha)


def _test_values(f: HarmonicMap, alpha: float, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return evaluate(test_operator(f.h, alpha), points), evaluate(test_operator(f.g, alpha), points)


def wh0_margin(f: HarmonicMap, alpha: float, grid: DiskGrid) -> MarginReport:
    """Minimum of ``Re T[h] - |T[g]|`` over the grid (T = test operator)."""
    A, B = _test_values(f, alpha, grid.points)
    return _report(A.real - np.abs(B), grid.points, grid, "wh0_margin", alpha=alpha)


def epsilon_min_margin(
    f: HarmonicMap,
    alpha: float,
    grid: DiskGrid,
    eps: EpsilonSample | None = None,
) -> MarginReport:
    """Minimum over sampled ``eps`` and the grid of ``Re T[h + eps*g]``.

    Uses linearity of the test operator: ``T[h + eps g] = T[h] + eps T[g]``.
    Ties are broken by the first eps in sample order, then by grid order.
    """
    eps = eps or EpsilonSample()
    A, B = _test_values(f, alpha, grid.points)
    ar, br, bi = A.real, B.real, B.imag
    best, best_i, best_k = np.inf, 0, 0
    for k, e in enumerate(eps.values):
        vals = ar + (e.real * br - e.imag * bi)
        i = int(np.argmin(vals))
        if vals[i] < best:
            best, best_i, best_k = float(vals[i]), i, k
    e = complex(eps.values[best_k])
    return MarginReport(
        best,
        complex(grid.points[best_i]),
        grid,
        "epsilon_min_margin",
        {"alpha": alpha, "eps_count": eps.count, "eps_argmin": [e.real, e.imag],
         "max_abs_Tg": float(np.max(np.abs(B)))},
    )


def sufficient_condition_sum(f: HarmonicMap, alpha: float) -> float:
    """``sum_{n>=2} (alpha n^2 + (1-alpha) n)(|a_n| + |b_n|)``; below 1 certifies membership."""
    alpha = check_alpha(alpha)
    n_max = f.order
    if n_max < 2:
        return 0.0
    n = np.arange(2, n_max + 1, dtype=float)
    a = np.abs(f.h.padded(n_max)[2:])
    b = np.abs(f.g.padded(n_max)[2:])
    return float(np.sum(multiplier(alpha, n) * (a + b)))


def halfplane_margin(F: AnalyticSeries, grid: DiskGrid) -> MarginReport:
    """Minimum of ``Re(F(z)/z) - 1/2``; ``F(z)/z`` is the shifted series."""
    if abs(F[0]) > SERIES_TOL:
        raise ParameterError("halfplane margin needs c_0 = 0")
    shifted = AnalyticSeries(F.coeffs[1:]) if F.order >= 1 else AnalyticSeries.zeros(0)
    vals = evaluate(shifted, grid.points).real - 0.5
    return _report(vals, grid.points, grid, "halfplane_margin")


def sense_preserving_margin(f: HarmonicMap, grid: DiskGrid) -> MarginReport:
    dh = evaluate(f.dh, grid.points)
    dg = evaluate(f.dg, grid.points)
    return _report(np.abs(dh) ** 2 - np.abs(dg) ** 2, grid.points, grid, "jacobian")


def starlike_margin(f: HarmonicMap, grid: DiskGrid) -> MarginReport:
    """Minimum of the angular derivative of ``arg f(r e^{i theta})``.

    That derivative is ``Re[(z h' - conj(z g')) / f]``; the origin takes its
    limit value 1.
    """
    z = grid.points[1:]
    fz = evaluate(f.h, z) + np.conj(evaluate(f.g, z))
    small = np.abs(fz) < DEGENERATE_TOL
    if np.any(small):
        p = complex(z[int(np.argmax(small))])
        raise DegeneratePointError(p, f"|f(z)| < {DEGENERATE_TOL} at z = {p!r}")
    num = z * evaluate(f.dh, z) - np.conj(z * evaluate(f.dg, z))
    vals = np.concatenate([[1.0], (num / fz).real])
    return _report(vals, grid.points, grid, "starlike")
