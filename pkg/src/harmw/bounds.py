"""Coefficient bounds, the growth envelope, and the convex-null-sequence check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import HypothesisError, ParameterError
from .harmonic import HarmonicMap
from .membership import DiskGrid
from .series import check_alpha, evaluate, multiplier

BOUND_TOL = 1e-12
GROWTH_TOL = 1e-9


def coefficient_bound(alpha: float, n: int) -> tuple[float, float]:
    """Bounds on ``|b_n|`` and on ``|a_n| + |b_n|`` for members of W0_H(alpha)."""
    alpha = check_alpha(alpha)
    if n < 2:
        raise ParameterError("n must be >= 2")
    m = multiplier(alpha, float(n))
    return 1.0 / m, 2.0 / m


@dataclass(frozen=True)
class BoundRow:
    key: Union[int, float]
    name: str
    observed: float
    bound: float

    @property
    def satisfied(self) -> bool:
        return self.observed <= self.bound + BOUND_TOL


@dataclass
class BoundReport:
    rows: list[BoundRow] = field(default_factory=list)
    proven_regime: bool = True

    @property
    def passed(self) -> bool:
        return all(r.satisfied for r in self.rows)

    @property
    def violations(self) -> list[BoundRow]:
        return [r for r in self.rows if not r.satisfied]

    def to_dict(self) -> dict:
        bad = self.violations
        return {
            "passed": self.passed,
            "proven_regime": self.proven_regime,
            "rows": len(self.rows),
            "violations": [
                {"key": r.key, "name": r.name, "observed": r.observed, "bound": r.bound} for r in bad[:20]
            ],
            "violation_count": len(bad),
        }


def verify_coefficient_bounds(f: HarmonicMap, alpha: float) -> BoundReport:
    """Check |b_n|, |a_n|+|b_n|, ||a_n|-|b_n|| and |a_n| for 2 <= n <= order."""
    report = BoundReport()
    for n in range(2, f.order + 1):
        bb, bs = coefficient_bound(alpha, n)
        a, b = abs(f.h[n]), abs(f.g[n])
        report.rows += [
            BoundRow(n, "|b_n|", b, bb),
            BoundRow(n, "|a_n|+|b_n|", a + b, bs),
            BoundRow(n, "||a_n|-|b_n||", abs(a - b), bs),
            BoundRow(n, "|a_n|", a, bs),
        ]
    return report


@dataclass(frozen=True)
class GrowthEnvelope:
    r: float
    lower: float
    upper: float
    tail_bound: float
    proven: bool = True


def _check_growth_alpha(alpha: float, allow_out_of_hypothesis: bool) -> bool:
    alpha = check_alpha(alpha)
    inside = 0.0 < alpha <= 1.0
    if not inside and not allow_out_of_hypothesis:
        raise HypothesisError(f"growth envelope is proven only for 0 < alpha <= 1, got {alpha!r}")
    return inside


def growth_envelope(alpha: float, r: float, order: int = 64, *, allow_out_of_hypothesis: bool = False) -> GrowthEnvelope:
    """Lower/upper bounds on ``|f(z)|`` at ``|z| = r``.

    Partial sums run to ``order``; the neglected tail is majorized by
    ``2 r^(N+1) / ((1-r) m(N+1))`` and added to the upper, subtracted from
    the lower sum.
    """
    proven = _check_growth_alpha(alpha, allow_out_of_hypothesis)
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise ParameterError(f"r must lie in [0, 1), got {r!r}")
    if order < 1:
        raise ParameterError("order must be >= 1")
    n = np.arange(2, order + 1, dtype=float)
    terms = 2.0 * r**n / multiplier(alpha, n)
    signs = np.where(n % 2 == 0, -1.0, 1.0)
    upper = r + float(np.sum(terms))
    lower = r + float(np.sum(signs * terms))
    tail = 2.0 * r ** (order + 1) / ((1.0 - r) * multiplier(alpha, float(order + 1)))
    return GrowthEnvelope(r, lower - tail, upper + tail, tail, proven)


def verify_growth(
    f: HarmonicMap,
    alpha: float,
    grid: DiskGrid,
    order: Optional[int] = None,
    *,
    allow_out_of_hypothesis: bool = False,
) -> BoundReport:
    """Check the envelope at every grid point.

    The envelope depends on |z| only, so each ring contributes two rows: the
    largest |f| on the ring against the upper bound, and the lower bound
    against the smallest |f| on the ring. Tolerance is tail + 1e-9.
    """
    proven = _check_growth_alpha(alpha, allow_out_of_hypothesis)
    order = order or max(f.order, 2)
    pts = grid.points[1:].reshape(grid.radial_count, grid.angular_count)
    vals = np.abs(evaluate(f.h, pts) + np.conj(evaluate(f.g, pts)))
    report = BoundReport(proven_regime=proven)
    report.rows.append(BoundRow(0.0, "|f(0)|", abs(complex(f(0j))), GROWTH_TOL))
    for j, r in enumerate(grid.radii):
        env = growth_envelope(alpha, r, order, allow_out_of_hypothesis=True)
        tol = env.tail_bound + GROWTH_TOL
        report.rows.append(BoundRow(float(r), "max|f| <= upper", float(vals[j].max()), env.upper - env.tail_bound + tol))
        report.rows.append(BoundRow(float(r), "lower <= min|f|", env.lower + env.tail_bound - tol, float(vals[j].min())))
    return report


@dataclass(frozen=True)
class ConvexNullResult:
    passed: bool
    violation: Optional[tuple[int, int, int]] = None
    detail: str = ""


def convex_null_sequence(alpha: float, count: int) -> list[Fraction]:
    """``c_0 = 1``, ``c_k = 2/m(k+1)`` for k >= 1, in exact rational arithmetic."""
    a = Fraction(check_alpha(alpha))
    return [Fraction(1)] + [Fraction(2) / (a * (k + 1) ** 2 + (1 - a) * (k + 1)) for k in range(1, count + 1)]


def convex_null_check(alpha: float, count: int) -> ConvexNullResult:
    """Check ``c_{k-1} - c_k >= c_k - c_{k+1} >= 0`` for k = 1..count-1.

    Arithmetic is exact (alpha is converted from its binary value), so the
    boundary case alpha = 1/2 is decided without rounding.
    """
    if count < 3:
        raise ParameterError("count must be >= 3")
    c = convex_null_sequence(alpha, count)
    for k in range(1, count):
        d_prev, d_next = c[k - 1] - c[k], c[k] - c[k + 1]
        if not (d_prev >= d_next >= 0):
            return ConvexNullResult(
                False, (k - 1, k, k + 1),
                f"c_{k-1}-c_{k} = {float(d_prev):.6g}, c_{k}-c_{k+1} = {float(d_next):.6g}",
            )
    return ConvexNullResult(True)
