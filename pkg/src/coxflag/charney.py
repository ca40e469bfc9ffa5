"""The alternating invariant omega(S) and per-instance conjecture reports."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .complex import FlagComplex
from .homology import is_ghs


def omega(S: FlagComplex) -> Fraction:
    """Sum over all simplices (the empty one included) of (-1)^(dim+1) / #W_sigma."""
    total = Fraction(0)
    for s in S.simplices:
        term = Fraction(1, S.orders[s])
        total += -term if len(s) % 2 else term
    return total


def omega_by_dimension(S: FlagComplex) -> Fraction:
    """Same value as :func:`omega`, summed dimension by dimension."""
    total = Fraction(0)
    for d in range(-1, S.dimension + 1):
        layer = sum((Fraction(1, S.orders[s]) for s in S.of_dimension(d)), Fraction(0))
        total += (-1) ** (d + 1) * layer
    return total


def omega_right_angled(S: FlagComplex) -> Fraction:
    """Closed form for right-angled inputs: sum over the f-vector of (-1/2)^(dim+1)."""
    if not S.graph.is_right_angled():
        raise ValueError("complex has edges of weight > 2")
    return sum((Fraction(-1, 2) ** k * f for k, f in enumerate(S.f_vector())), Fraction(0))


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of testing one complex against the sign prediction.

    ``predicted_sign`` is (-1)^n for a (2n-1)-dimensional sphere: +1 means
    omega >= 0 is predicted, -1 means omega <= 0. ``satisfied`` is None
    unless the complex is an odd-dimensional GHS with all groups finite.
    """

    dimension: int
    is_odd_sphere: bool
    all_finite: bool
    omega: Fraction
    predicted_sign: Optional[int]
    satisfied: Optional[bool]

    def __str__(self):
        verdict = {None: "not applicable", True: "satisfied", False: "VIOLATED"}[self.satisfied]
        return (f"dim={self.dimension} odd_sphere={self.is_odd_sphere} "
                f"omega={self.omega} -> {verdict}")


def check_conjecture_instance(S: FlagComplex) -> ConjectureReport:
    """Evaluate (-1)^n omega(S) >= 0 when S is a GHS of odd dimension 2n - 1."""
    d = S.dimension
    w = omega(S)
    odd_sphere = d % 2 != 0 and bool(is_ghs(S, d))
    if not odd_sphere:
        return ConjectureReport(d, False, True, w, None, None)
    sign = (-1) ** ((d + 1) // 2)
    return ConjectureReport(d, True, True, w, sign, sign * w >= 0)
