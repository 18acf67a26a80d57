"""Exact truncated power series and the generating function of G."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of x^0 .. x^(order-1) as exact rationals, mod x^order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("order must be at least 1")

    @classmethod
    def of(cls, coeffs: Iterable, order: int) -> PowerSeries:
        cs = [Fraction(c) for c in coeffs][:order]
        cs += [Fraction(0)] * (order - len(cs))
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check(self, other: PowerSeries) -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            self._check(other)
            return other
        return PowerSeries.of([other], self.order)

    def __add__(self, other) -> PowerSeries:
        o = self._coerce(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> PowerSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> PowerSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(tuple(a * c for a in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        N = self.order
        return PowerSeries(tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(N)))

    __rmul__ = __mul__

    def shift(self, k: int) -> PowerSeries:
        """Multiply by x^k (k >= 0) or divide by x^-k (k < 0).

        Division requires the dropped low coefficients to be exactly zero.
        The freed top coefficients become zero, so dividing loses the last
        ``-k`` terms of precision; callers size ``order`` accordingly.
        """
        N = self.order
        if k >= 0:
            return PowerSeries((Fraction(0),) * min(k, N) + self.coeffs[: max(N - k, 0)])
        k = -k
        if any(self.coeffs[:k]):
            raise ZeroDivisionError(f"series is not divisible by x^{k}")
        return PowerSeries(self.coeffs[k:] + (Fraction(0),) * k)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def x_series(order: int) -> PowerSeries:
    return PowerSeries.of([0, 1], order)


def series_sqrt(s: PowerSeries) -> PowerSeries:
    """The square root with constant term 1, by solving t*t = s term by term.

    From sum_{i+j=k} t_i t_j = s_k and t_0 = 1:
    t_k = (s_k - sum_{i=1}^{k-1} t_i t_{k-i}) / 2.
    """
    if s[0] != 1:
        raise ValueError(f"series_sqrt needs constant term 1, got {s[0]}")
    t = [Fraction(1)]
    for k in range(1, s.order):
        t.append((s[k] - sum(t[i] * t[k - i] for i in range(1, k))) / 2)
    return PowerSeries(tuple(t))


def zeta_coefficients(order: int) -> PowerSeries:
    """(2x + 1 - sqrt(1 - 4x - 4x^2)) / (4x) to ``order`` terms.

    The numerator is computed to one extra term so the division by x keeps
    full precision; its constant term must vanish, which selects the branch
    that is finite at x = 0.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    N = order + 1
    x = x_series(N)
    disc = 1 - 4 * x - 4 * x * x
    numerator = 2 * x + 1 - series_sqrt(disc)
    if numerator[0] != 0:
        raise ArithmeticError("numerator has nonzero constant term; wrong branch")
    quotient = numerator.shift(-1) * Fraction(1, 4)
    return PowerSeries(quotient.coeffs[:order])


def functional_equation_residual(zeta: PowerSeries) -> PowerSeries:
    """2x*zeta^2 - (2x+1)*zeta + (x+1), truncated to zeta's order."""
    x = x_series(zeta.order)
    return 2 * x * zeta * zeta - (2 * x + 1) * zeta + (x + 1)


def verify_functional_equation(order: int) -> PowerSeries:
    return functional_equation_residual(zeta_coefficients(order))


def discriminant_root(digits: int = 40) -> tuple[float, float]:
    """Smallest positive root of 1 - 4x - 4x^2 and its reciprocal.

    The root is (sqrt(2) - 1) / 2, so the reciprocal is 2 + 2 sqrt(2).
    Evaluated in ``digits``-digit decimal arithmetic, then rounded to float.
    """
    with localcontext() as ctx:
        ctx.prec = digits
        s2 = Decimal(2).sqrt()
        root = (s2 - 1) / 2
        growth = 1 / root
    return float(root), float(growth)


def coefficients_as_ints(s: Sequence[Fraction]) -> list[int]:
    out = []
    for c in s:
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        out.append(c.numerator)
    return out
