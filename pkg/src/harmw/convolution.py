"""Harmonic convolution, convolution with an analytic factor, convex combinations."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ParameterError
from .harmonic import HarmonicMap
from .series import SERIES_TOL, AnalyticSeries, hadamard

WEIGHT_TOL = 1e-12


def harmonic_convolve(f1: HarmonicMap, f2: HarmonicMap) -> HarmonicMap:
    """``h1*h2 + conj(g1*g2)``, truncated to the shorter order."""
    return HarmonicMap(hadamard(f1.h, f2.h), hadamard(f1.g, f2.g))


def tilde_convolve(f: HarmonicMap, phi: AnalyticSeries) -> HarmonicMap:
    """``h*phi + conj(g*phi)`` for a normalized analytic ``phi``."""
    if abs(phi[0]) > SERIES_TOL or abs(phi[1] - 1.0) > SERIES_TOL:
        raise ParameterError("phi must satisfy phi(0) = 0 and phi'(0) = 1")
    return HarmonicMap(hadamard(f.h, phi), hadamard(f.g, phi))


def convex_combination(weights: Sequence[float], members: Sequence[HarmonicMap]) -> HarmonicMap:
    if len(weights) != len(members) or not members:
        raise ParameterError("need one weight per member and at least one member")
    w = np.asarray(weights, dtype=float)
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise ParameterError("weights must be finite and nonnegative")
    if abs(float(np.sum(w)) - 1.0) > WEIGHT_TOL:
        raise ParameterError(f"weights must sum to 1, got {float(np.sum(w))!r}")
    n = max(m.order for m in members)
    h = sum(wi * m.h.padded(n) for wi, m in zip(w, members))
    g = sum(wi * m.g.padded(n) for wi, m in zip(w, members))
    return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g))
