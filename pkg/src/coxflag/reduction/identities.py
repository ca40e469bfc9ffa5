"""Bernoulli-number identities and generating-function checks for the coefficient families."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from math import factorial as fac

from ..exact import DEFAULT_ORDER, TruncatedSeries, bernoulli, todd_series
from . import coefficients as C

B = bernoulli


def convolution_identity_sides(n: int) -> tuple:
    """Both sides of  sum_{i=1}^{n-2} B_{n-i} / (i! (n-i)!) = 1/(2 (n-1)!) - 1/n!."""
    if n < 2:
        raise ValueError("identity needs n >= 2")
    lhs = sum((B(n - i) / (fac(i) * fac(n - i)) for i in range(1, n - 1)), Fraction(0))
    rhs = Fraction(1, 2 * fac(n - 1)) - Fraction(1, fac(n))
    return lhs, rhs


def check_convolution_identity(n: int) -> bool:
    lhs, rhs = convolution_identity_sides(n)
    return lhs == rhs


def five_term_identity_sides(n: int) -> tuple:
    """Both sides of the five-term Bernoulli identity (n >= 3)::

        sum_{j=2}^{n-2} B_{n-j} / (2^{j+1} (j+2)! (n-j)!) + B_{n-1} / (24 (n-1)!)
          + B_n / (4 n!) + B_{n+1} / (n+1)! + B_{n+2} / (n+2)! * (4 - 2^-n)
        = (n+1) / (2^{n+1} (n+2)!)
    """
    if n < 3:
        raise ValueError("identity needs n >= 3")
    lhs = sum((B(n - j) / (2 ** (j + 1) * fac(j + 2) * fac(n - j)) for j in range(2, n - 1)),
              Fraction(0))
    lhs += B(n - 1) / (24 * fac(n - 1))
    lhs += B(n) / (4 * fac(n))
    lhs += B(n + 1) / fac(n + 1)
    lhs += B(n + 2) / fac(n + 2) * (4 - Fraction(1, 2**n))
    rhs = Fraction(n + 1, 2 ** (n + 1) * fac(n + 2))
    return lhs, rhs


def check_five_term_identity(n: int) -> bool:
    lhs, rhs = five_term_identity_sides(n)
    return lhs == rhs


# -- generating functions ------------------------------------------------------

def _exp(order, scale=1):
    return TruncatedSeries.exp(order, scale)


def _inv_exp_half_plus_one(order):
    """1 / (e^{x/2} + 1)."""
    return 1 / (_exp(order, Fraction(1, 2)) + 1)


def beta_series_closed(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """1 - x / (e^{x/2} + 1) - x / (e^x - 1)."""
    return 1 - _inv_exp_half_plus_one(order).shift_up(1) - todd_series(order)


def delta_series_closed(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """-x^2/4 + x - 2x / (e^{x/2} + 1)."""
    poly = TruncatedSeries.from_coefficients([0, 1, Fraction(-1, 4)], order)
    return poly - 2 * _inv_exp_half_plus_one(order).shift_up(1)


def beta_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_{n >= 2} beta_n x^n with beta_n taken from the b / b~ recurrences."""
    return TruncatedSeries.from_coefficients(
        [0, 0] + [C.beta(n) for n in range(2, order + 1)], order)


def delta_prime_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_{n >= 4} delta'_n x^n with delta'_n from the d' / d~' recurrences."""
    return TruncatedSeries.from_coefficients(
        [0, 0, 0, 0] + [C.delta_prime(n) for n in range(4, order + 1)], order)


def _aux_f(order):
    """(e^x - x - 1) / x."""
    return (_exp(order + 1) - TruncatedSeries.from_coefficients([1, 1], order + 1)).shift_down(1)


def beta_functional_equation_holds(order: int = DEFAULT_ORDER) -> bool:
    """beta series == -beta * F + (e^x - 1 - x)/x - (e^{x/2} - 1)."""
    bs = beta_series(order)
    rhs = -bs * _aux_f(order) + _aux_f(order) - (_exp(order, Fraction(1, 2)) - 1)
    return bs == rhs


def delta_functional_equation_holds(order: int = DEFAULT_ORDER) -> bool:
    """delta' series == -E F - x/4 (e^x - 1 - x - x^2/2) + (e^x - ...) - 2 (e^{x/2} - ...)."""
    es = delta_prime_series(order)
    g = _exp(order) - TruncatedSeries.from_coefficients([1, 1, Fraction(1, 2)], order)
    exp_tail = _exp(order) - TruncatedSeries.from_coefficients(
        [Fraction(1, fac(k)) for k in range(4)], order)
    half_tail = _exp(order, Fraction(1, 2)) - TruncatedSeries.from_coefficients(
        [Fraction(1, 2**k * fac(k)) for k in range(4)], order)
    rhs = -es * _aux_f(order) - g.shift_up(1) / 4 + exp_tail - 2 * half_tail
    return es == rhs


@lru_cache(maxsize=None)
def alpha_recurrence(n: int, t: int) -> Fraction:
    """alpha_{n,t} from its own recurrence (not via a - a~)."""
    if n < 2 or not 1 <= t <= n - 1:
        raise ValueError(f"no alpha_{n},{t}")
    total = Fraction(0)
    for i in range(t):
        for j in range(n - t):
            if i == j == 0:
                continue
            total -= alpha_recurrence(n - i - j, t - i) / (fac(i + 1) * fac(j + 1))
    return total + Fraction(1, fac(t + 1) * fac(n - t + 1)) - Fraction(1, fac(n + 1))


def _poly(coeffs, order):
    return TruncatedSeries.from_coefficients(coeffs, order)


@lru_cache(maxsize=None)
def p_polynomial(n: int, order: int) -> TruncatedSeries:
    """P_n(y) = sum_t alpha_{n,t} y^t via the recurrence in y (coefficients up to y^order)."""
    total = TruncatedSeries.constant(0, order)
    for s in range(1, n - 1):
        k = s + 2
        # ((1+y)^k - y^k - 1) / y  has coefficients C(k, i+1) for i = 0..k-2
        q = _poly([comb(k, i + 1) for i in range(k - 1)], order)
        total -= p_polynomial(n - s, order) * q / fac(k)
    for t in range(1, n):
        c = Fraction(1, fac(t + 1) * fac(n - t + 1)) - Fraction(1, fac(n + 1))
        total += TruncatedSeries.monomial(t, order, c)
    return total


def p_polynomial_closed(n: int, order: int) -> TruncatedSeries:
    """B_n/n! (y + y^2 + ... + y^{n-1})."""
    c = bernoulli(n) / fac(n)
    return _poly([0] + [c] * (n - 1), order)


@dataclass
class GeneratingFunctionReport:
    order: int
    max_n: int
    beta_ok: bool
    delta_prime_ok: bool
    p_ok: bool
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.beta_ok and self.delta_prime_ok and self.p_ok


def verify_generating_functions(order: int = DEFAULT_ORDER, max_n: int = 12) -> GeneratingFunctionReport:
    """Coefficientwise comparison of recurrence-generated series with their closed forms."""
    if order < 4:
        raise ValueError("order must be >= 4")
    mism = []
    bs, bc = beta_series(order), beta_series_closed(order)
    for k in range(order + 1):
        if bs[k] != bc[k]:
            mism.append(("beta", k, bs[k], bc[k]))
    beta_ok = not any(m[0] == "beta" for m in mism)
    ds, dc = delta_prime_series(order), delta_series_closed(order)
    for k in range(order + 1):
        if ds[k] != dc[k]:
            mism.append(("delta'", k, ds[k], dc[k]))
    delta_ok = not any(m[0] == "delta'" for m in mism)
    p_ok = True
    for n in range(2, max_n + 1):
        closed = p_polynomial_closed(n, n + 1)
        via_alpha = _poly([0] + [alpha_recurrence(n, t) for t in range(1, n)], n + 1)
        via_y = p_polynomial(n, n + 1)
        for name, poly in (("P via alpha", via_alpha), ("P via y-recurrence", via_y)):
            if poly != closed:
                p_ok = False
                mism.append((name, n, poly, closed))
    return GeneratingFunctionReport(order, max_n, beta_ok, delta_ok, p_ok, mism)
