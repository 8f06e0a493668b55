"""Harmonic maps ``f = h + conj(g)`` with the class-zero normalization.

``g`` is stored unconjugated; conjugation only happens on evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NormalizationError, ParameterError
from .series import (
    SERIES_TOL,
    AnalyticSeries,
    differentiate,
    dilate,
    evaluate,
)

UNIT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """Normalized pair (h, g): ``a_0 = 0, a_1 = 1`` and ``b_0 = b_1 = 0``.

    Coefficients within ``SERIES_TOL`` of the required values are snapped to
    them exactly, so that e.g. convex combinations stay normalized.
    """

    h: AnalyticSeries
    g: AnalyticSeries

    def __post_init__(self):
        h = self.h if isinstance(self.h, AnalyticSeries) else AnalyticSeries(self.h)
        g = self.g if isinstance(self.g, AnalyticSeries) else AnalyticSeries(self.g)
        hc = h.padded(1)
        gc = g.padded(1)
        checks = [
            (hc[0], 0.0, "a_0 = 0 (f(0) = 0)"),
            (hc[1], 1.0, "a_1 = 1 (h'(0) = 1)"),
            (gc[0], 0.0, "b_0 = 0 (f(0) = 0)"),
            (gc[1], 0.0, "b_1 = 0 (g'(0) = 0)"),
        ]
        for value, target, name in checks:
            if abs(value - target) > SERIES_TOL:
                raise NormalizationError(f"normalization violated: {name}, got {complex(value)!r}")
        hc[0], hc[1] = 0.0, 1.0
        gc[0], gc[1] = 0.0, 0.0
        object.__setattr__(self, "h", AnalyticSeries(hc))
        object.__setattr__(self, "g", AnalyticSeries(gc))

    @property
    def order(self) -> int:
        return max(self.h.order, self.g.order)

    @property
    def a(self) -> np.ndarray:
        return self.h.coeffs

    @property
    def b(self) -> np.ndarray:
        return self.g.coeffs

    @cached_property
    def dh(self) -> AnalyticSeries:
        return differentiate(self.h)

    @cached_property
    def dg(self) -> AnalyticSeries:
        return differentiate(self.g)

    def __call__(self, z):
        return evaluate_harmonic(self, z)

    def __repr__(self) -> str:
        return f"HarmonicMap(h={self.h!r}, g={self.g!r})"


def make_harmonic(h: AnalyticSeries, g: AnalyticSeries) -> HarmonicMap:
    return HarmonicMap(h, g)


def identity_map() -> HarmonicMap:
    return HarmonicMap(AnalyticSeries.monomial(1), AnalyticSeries.zeros(1))


@dataclass(frozen=True)
class EpsilonSample:
    """``count`` equally spaced unimodular numbers ``exp(2 pi i k / count)``."""

    count: int = 360

    def __post_init__(self):
        if int(self.count) < 1:
            raise ParameterError("epsilon sample count must be >= 1")

    @cached_property
    def values(self) -> np.ndarray:
        t = 2.0 * np.pi * np.arange(self.count) / self.count
        v = np.cos(t) + 1j * np.sin(t)
        v.setflags(write=False)
        return v


def epsilon_slice(f: HarmonicMap, eps: complex) -> AnalyticSeries:
    """The analytic function ``h + eps*g`` for ``|eps| = 1``."""
    eps = complex(eps)
    if not np.isfinite(eps) or abs(abs(eps) - 1.0) > UNIT_TOL:
        raise ParameterError(f"eps must be unimodular, got |eps| = {abs(eps)!r}")
    return f.h + eps * f.g


def evaluate_harmonic(f: HarmonicMap, z):
    hz = evaluate(f.h, z)
    gz = evaluate(f.g, z)
    return hz + np.conj(gz)


def jacobian(f: HarmonicMap, z):
    """``|h'(z)|**2 - |g'(z)|**2`` (scalar or array)."""
    dh = evaluate(f.dh, z)
    dg = evaluate(f.dg, z)
    out = np.abs(dh) ** 2 - np.abs(dg) ** 2
    return float(out) if np.ndim(out) == 0 else out


def section(f: HarmonicMap, p: int, q: int) -> HarmonicMap:
    """Partial sum ``s_p(h) + conj(s_q(g))``."""
    if p < 1 or q < 1:
        raise ParameterError(f"section degrees must be >= 1, got p={p}, q={q}")
    return HarmonicMap(f.h.truncate(p), f.g.truncate(q))


def dilate_map(f: HarmonicMap, r: float) -> HarmonicMap:
    """Dilate both parts by the same ``r``: ``f(rz)/r`` on each of h and g."""
    return HarmonicMap(dilate(f.h, r), dilate(f.g, r))


def rotate_map(f: HarmonicMap, theta: float) -> HarmonicMap:
    """``exp(-i theta) f(exp(i theta) z)``.

    Multiplies ``a_n`` by ``exp(i(n-1)theta)`` and ``b_n`` by ``exp(i(n+1)theta)``
    (the latter because g enters conjugated).
    """
    nh = np.arange(f.h.order + 1)
    ng = np.arange(f.g.order + 1)
    return HarmonicMap(
        AnalyticSeries(f.h.coeffs * np.exp(1j * (nh - 1) * theta)),
        AnalyticSeries(f.g.coeffs * np.exp(1j * (ng + 1) * theta)),
    )
