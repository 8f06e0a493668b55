"""Named functions: Koebe maps, sharp families and seeded random members."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .errors import ParameterError
from .harmonic import HarmonicMap, identity_map
from .series import AnalyticSeries, check_alpha, multiplier

DEFAULT_ORDER = 64


def conjectured_bounds(n: int) -> tuple[float, float]:
    """``(A_n, B_n) = ((2n+1)(n+1)/6, (2n-1)(n-1)/6)``.

    Reference constants of the harmonic Koebe function; they are not bounds
    for the W0_H(alpha) class.
    """
    if n < 2:
        raise ParameterError("n must be >= 2")
    return (2 * n + 1) * (n + 1) / 6.0, (2 * n - 1) * (n - 1) / 6.0


def koebe_rational_coefficients(order: int) -> tuple[list[Fraction], list[Fraction]]:
    """Exact Taylor coefficients of the two rational parts of the harmonic Koebe map.

    ``(z - z^2/2 + z^3/6) / (1-z)^3`` and ``(z^2/2 + z^3/6) / (1-z)^3``, using
    ``1/(1-z)^3 = sum (k+1)(k+2)/2 z^k``.
    """
    d = [Fraction((k + 1) * (k + 2), 2) for k in range(order + 1)]
    num_h = {1: Fraction(1), 2: Fraction(-1, 2), 3: Fraction(1, 6)}
    num_g = {2: Fraction(1, 2), 3: Fraction(1, 6)}

    def expand(num):
        return [sum((c * d[n - j] for j, c in num.items() if j <= n), Fraction(0)) for n in range(order + 1)]

    return expand(num_h), expand(num_g)


def harmonic_koebe(order: int = DEFAULT_ORDER) -> HarmonicMap:
    if order < 3:
        raise ParameterError("harmonic Koebe needs order >= 3")
    n = np.arange(order + 1, dtype=float)
    a = (2 * n + 1) * (n + 1) / 6.0
    b = (2 * n - 1) * (n - 1) / 6.0
    a[0], b[0], b[1] = 0.0, 0.0, 0.0
    return HarmonicMap(AnalyticSeries(a), AnalyticSeries(b))


def analytic_koebe(order: int = DEFAULT_ORDER) -> AnalyticSeries:
    """``z/(1-z)^2`` truncated: ``c_n = n``."""
    if order < 1:
        raise ParameterError("order must be >= 1")
    return AnalyticSeries(np.arange(order + 1, dtype=float))


def geometric_series(order: int = DEFAULT_ORDER, rho: float = 1.0) -> AnalyticSeries:
    """``z/(1 - rho z)`` truncated; convex for ``0 < rho <= 1``."""
    n = np.arange(order + 1, dtype=float)
    c = rho ** (n - 1)
    c[0] = 0.0
    return AnalyticSeries(c)


def log_series(order: int = DEFAULT_ORDER) -> AnalyticSeries:
    """``-log(1 - z)`` truncated (a convex univalent function)."""
    n = np.arange(order + 1, dtype=float)
    c = np.zeros(order + 1)
    c[1:] = 1.0 / n[1:]
    return AnalyticSeries(c)


def sharp_sum(alpha: float, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """``z + sum_{n=2}^{order} 2/(alpha n^2 + (1-alpha) n) z^n`` with g = 0."""
    alpha = check_alpha(alpha)
    if order < 2:
        raise ParameterError("order must be >= 2")
    n = np.arange(2, order + 1, dtype=float)
    a = np.zeros(order + 1)
    a[1] = 1.0
    a[2:] = 2.0 / multiplier(alpha, n)
    return HarmonicMap(AnalyticSeries(a), AnalyticSeries.zeros(1))


def sharp_single(alpha: float, n: int) -> HarmonicMap:
    """``z + conj(z^n)/(alpha n^2 + (1-alpha) n)``."""
    alpha = check_alpha(alpha)
    if n < 2:
        raise ParameterError("n must be >= 2")
    b = np.zeros(n + 1)
    b[n] = 1.0 / multiplier(alpha, float(n))
    return HarmonicMap(AnalyticSeries.monomial(1), AnalyticSeries(b))


def random_member(alpha: float, order: int = DEFAULT_ORDER, seed: int = 0, slack: float = 0.1) -> HarmonicMap:
    """Seeded member of W0_H(alpha), certified by the coefficient-sum test.

    For each n = 2..order four uniforms (|a_n|, arg a_n, |b_n|, arg b_n) are
    drawn row by row from ``numpy.random.default_rng(seed)`` (PCG64); the
    magnitudes are divided by ``n**2``. All coefficients are then scaled by
    one factor so that the coefficient sum equals ``1 - slack``.
    """
    alpha = check_alpha(alpha)
    if not (0.0 < slack < 1.0):
        raise ParameterError("slack must lie in (0, 1)")
    if order < 2:
        raise ParameterError("order must be >= 2")
    rng = np.random.default_rng(seed)
    u = rng.random((order - 1, 4))
    n = np.arange(2, order + 1, dtype=float)
    a = u[:, 0] / n**2 * np.exp(2j * np.pi * u[:, 1])
    b = u[:, 2] / n**2 * np.exp(2j * np.pi * u[:, 3])
    total = np.sum(multiplier(alpha, n) * (np.abs(a) + np.abs(b)))
    scale = (1.0 - slack) / total
    h = np.zeros(order + 1, dtype=complex)
    g = np.zeros(order + 1, dtype=complex)
    h[1] = 1.0
    h[2:] = a * scale
    g[2:] = b * scale
    return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g))


_REQUIRED = {
    "identity": (),
    "harmonic_koebe": ("order",),
    "analytic_koebe": ("order",),
    "sharp_sum": ("alpha", "order"),
    "sharp_single": ("alpha", "n"),
    "random_member": ("alpha", "order", "seed", "slack"),
}
FAMILIES = tuple(_REQUIRED)


@dataclass(frozen=True)
class FamilySpec:
    """JSON-facing description of a named construction."""

    name: str
    alpha: Optional[float] = None
    n: Optional[int] = None
    order: Optional[int] = None
    seed: Optional[int] = None
    slack: Optional[float] = None

    def __post_init__(self):
        if self.name not in _REQUIRED:
            raise ParameterError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILIES)}")
        required = set(_REQUIRED[self.name])
        for key in ("alpha", "n", "order", "seed", "slack"):
            present = getattr(self, key) is not None
            if key in required and not present:
                raise ParameterError(f"family {self.name!r} requires parameter {key!r}")
            if key not in required and present:
                raise ParameterError(f"family {self.name!r} does not take parameter {key!r}")

    def build(self) -> HarmonicMap:
        if self.name == "identity":
            return identity_map()
        if self.name == "harmonic_koebe":
            return harmonic_koebe(self.order)
        if self.name == "analytic_koebe":
            return HarmonicMap(analytic_koebe(self.order), AnalyticSeries.zeros(1))
        if self.name == "sharp_sum":
            return sharp_sum(self.alpha, self.order)
        if self.name == "sharp_single":
            return sharp_single(self.alpha, self.n)
        return random_member(self.alpha, self.order, self.seed, self.slack)

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "FamilySpec":
        unknown = set(d) - {"name", "alpha", "n", "order", "seed", "slack"}
        if unknown:
            raise ParameterError(f"unknown family field(s): {', '.join(sorted(unknown))}")
        if "name" not in d:
            raise ParameterError("family spec needs a 'name'")
        kw = dict(d)
        for key in ("n", "order", "seed"):
            if key in kw:
                if isinstance(kw[key], bool) or not isinstance(kw[key], int):
                    raise ParameterError(f"family field {key!r} must be an integer")
        for key in ("alpha", "slack"):
            if key in kw:
                if isinstance(kw[key], bool) or not isinstance(kw[key], (int, float)):
                    raise ParameterError(f"family field {key!r} must be a number")
                kw[key] = float(kw[key])
        return cls(**kw)
