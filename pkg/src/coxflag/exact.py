"""Exact rationals, Bernoulli/Genocchi numbers and truncated power series.

Rationals are plain :class:`fractions.Fraction` values. Series are
immutable :class:`TruncatedSeries` objects holding the coefficients of
``x**0 .. x**order``; every coefficient they report is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_ORDER = 24

_bernoulli_cache = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n with the convention B_1 = -1/2.

    Uses the recurrence ``sum_{k=0}^{n} C(n+1, k) B_k = 0``; values are
    cached, so repeated calls are cheap.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    cache = _bernoulli_cache
    while len(cache) <= n:
        m = len(cache)
        acc = sum((math.comb(m + 1, k) * cache[k] for k in range(m)), Fraction(0))
        cache.append(-acc / (m + 1))
    return cache[n]


def genocchi(n: int) -> Fraction:
    """Genocchi number G_n = 2 (1 - 2**n) B_n (always integral)."""
    return 2 * (1 - 2**n) * bernoulli(n)


class ZeroConstantTerm(ZeroDivisionError):
    """Raised when dividing by a series whose constant coefficient is zero.

    Factor the power of x out of the divisor (see
    :meth:`TruncatedSeries.shift_down`) and divide again.
    """


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known modulo ``x**(order + 1)``.

    Combining two series of different orders truncates to the smaller one.
    """

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    # -- constructors -------------------------------------------------
    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        """Pad with zeros or cut ``coeffs`` so that it has exactly ``order + 1`` terms."""
        coeffs = list(coeffs)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coefficients([c], order)

    @classmethod
    def monomial(cls, k: int, order: int = DEFAULT_ORDER, c: Scalar = 1) -> "TruncatedSeries":
        """``c * x**k``."""
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = c
        return cls(tuple(coeffs))

    @classmethod
    def exp(cls, order: int = DEFAULT_ORDER, scale: Scalar = 1) -> "TruncatedSeries":
        """``exp(scale * x)``."""
        scale = Fraction(scale)
        return cls(tuple(scale**k / math.factorial(k) for k in range(order + 1)))

    # -- basic protocol -----------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __repr__(self):
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coefficients) if c]
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(x^{self.order + 1}))"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coefficients))
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c / other for c in self.coefficients))
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x**k``; the order is unchanged."""
        coeffs = (Fraction(0),) * k + self.coefficients
        return TruncatedSeries(coeffs[: self.order + 1])

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by ``x**k``. The first ``k`` coefficients must vanish; the order drops by ``k``."""
        if k > self.order:
            raise ValueError("shift exceeds truncation order")
        if any(self.coefficients[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        return TruncatedSeries(self.coefficients[k:])

    def substitute_scale(self, scale: Scalar) -> "TruncatedSeries":
        """``f(scale * x)``."""
        scale = Fraction(scale)
        return TruncatedSeries(tuple(c * scale**k for k, c in enumerate(self.coefficients)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Return q with ``q * b == a`` up to the common truncation order."""
    b0 = b[0]
    if b0 == 0:
        raise ZeroConstantTerm("divisor has zero constant term; factor out x first")
    n = min(a.order, b.order)
    q: list[Fraction] = []
    for k in range(n + 1):
        acc = a[k] - sum((q[i] * b[k - i] for i in range(k)), Fraction(0))
        q.append(acc / b0)
    return TruncatedSeries(tuple(q))


def todd_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``x / (e**x - 1)`` computed by dividing 1 by ``(e**x - 1) / x``."""
    denom = (TruncatedSeries.exp(order + 1) - 1).shift_down(1)
    return series_div(TruncatedSeries.constant(1, order), denom)


def genocchi_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``2x / (e**x + 1)``."""
    inv = series_div(TruncatedSeries.constant(1, order), TruncatedSeries.exp(order) + 1)
    return (2 * inv).shift_up(1)
