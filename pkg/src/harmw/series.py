"""Truncated complex power series.

An :class:`AnalyticSeries` stores ``c_0 .. c_N`` of ``F(z) = sum c_n z^n``.
Values are immutable: the coefficient array is a read-only copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import InputDomainError, ParameterError

SERIES_TOL = 1e-12
# slack on |z| <= 1 so that points like r*exp(i*theta) with r = 1 pass
_DISK_SLACK = 1e-12

ArrayLike = Union[complex, float, np.ndarray, Sequence[complex]]


def multiplier(alpha: float, n) -> np.ndarray | float:
    """Coefficient factor ``alpha*n**2 + (1 - alpha)*n`` of the test operator."""
    return alpha * n * n + (1.0 - alpha) * n


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha < 0:
        raise ParameterError(f"alpha must be finite and >= 0, got {alpha!r}")
    return alpha


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ParameterError("a series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise ParameterError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, values: Sequence[complex]) -> "AnalyticSeries":
        return cls(np.asarray(values, dtype=np.complex128))

    @classmethod
    def zeros(cls, order: int) -> "AnalyticSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def monomial(cls, n: int, coeff: complex = 1.0) -> "AnalyticSeries":
        c = np.zeros(n + 1, dtype=np.complex128)
        c[n] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        """Coefficient of ``z**n``; zero beyond the truncation order."""
        if n < 0:
            raise IndexError(n)
        return complex(self.coeffs[n]) if n <= self.order else 0j

    def __call__(self, z: ArrayLike):
        return evaluate(self, z)

    def padded(self, order: int) -> np.ndarray:
        out = np.zeros(max(order, self.order) + 1, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        return out

    def truncate(self, order: int) -> "AnalyticSeries":
        if order < 0:
            raise ParameterError("truncation order must be >= 0")
        return AnalyticSeries(self.padded(order)[: order + 1])

    def __add__(self, other: "AnalyticSeries") -> "AnalyticSeries":
        if not isinstance(other, AnalyticSeries):
            return NotImplemented
        n = max(self.order, other.order)
        return AnalyticSeries(self.padded(n) + other.padded(n))

    def __sub__(self, other: "AnalyticSeries") -> "AnalyticSeries":
        if not isinstance(other, AnalyticSeries):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "AnalyticSeries":
        if isinstance(scalar, AnalyticSeries):
            return NotImplemented
        return AnalyticSeries(self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "AnalyticSeries":
        return (-1.0) * self

    def __repr__(self) -> str:
        return f"AnalyticSeries(order={self.order}, coeffs={self.coeffs[:6]!r}{'...' if self.order > 5 else ''})"


def series_equal(a: AnalyticSeries, b: AnalyticSeries, tol: float = SERIES_TOL) -> bool:
    """Coefficientwise equality up to the shorter order.

    Coefficients that only the longer series carries must be below ``tol``
    in absolute value.
    """
    n = min(a.order, b.order)
    if np.any(np.abs(a.coeffs[: n + 1] - b.coeffs[: n + 1]) > tol):
        return False
    longer = a if a.order > b.order else b
    return bool(np.all(np.abs(longer.coeffs[n + 1 :]) <= tol))


def _check_points(z: ArrayLike) -> np.ndarray:
    zz = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(zz)):
        raise InputDomainError("evaluation point is not finite")
    if zz.size and np.max(np.abs(zz)) > 1.0 + _DISK_SLACK:
        raise InputDomainError("evaluation point outside the closed unit disk")
    return zz


def evaluate(F: AnalyticSeries, z: ArrayLike):
    """Horner evaluation, highest degree first.

    Accepts a scalar (returns ``complex``) or an array of points (returns an
    array of the same shape).
    """
    zz = _check_points(z)
    c = F.coeffs
    out = np.full(zz.shape, c[-1], dtype=np.complex128)
    for ck in c[-2::-1]:
        out = out * zz + ck
    if out.ndim == 0:
        return complex(out)
    return out


def differentiate(F: AnalyticSeries) -> AnalyticSeries:
    if F.order == 0:
        return AnalyticSeries.zeros(0)
    k = np.arange(1, F.order + 1)
    return AnalyticSeries(k * F.coeffs[1:])


def test_operator(F: AnalyticSeries, alpha: float) -> AnalyticSeries:
    """``F'(z) + alpha*z*F''(z)`` as a series.

    Coefficient ``n-1`` of the result is ``(alpha*n**2 + (1-alpha)*n) * c_n``.
    """
    alpha = check_alpha(alpha)
    if F.order == 0:
        return AnalyticSeries.zeros(0)
    n = np.arange(1, F.order + 1, dtype=float)
    return AnalyticSeries(multiplier(alpha, n) * F.coeffs[1:])


# keep pytest from collecting the operator as a test when imported into test modules
test_operator.__test__ = False


def hadamard(F1: AnalyticSeries, F2: AnalyticSeries) -> AnalyticSeries:
    n = min(F1.order, F2.order)
    return AnalyticSeries(F1.coeffs[: n + 1] * F2.coeffs[: n + 1])


def dilate(F: AnalyticSeries, r: float) -> AnalyticSeries:
    """``F(r z) / r``: coefficient ``c_n`` becomes ``c_n * r**(n-1)``."""
    r = float(r)
    if not (0.0 < r <= 1.0):
        raise ParameterError(f"dilation radius must lie in (0, 1], got {r!r}")
    n = np.arange(F.order + 1, dtype=float)
    return AnalyticSeries(F.coeffs * r ** (n - 1.0))
