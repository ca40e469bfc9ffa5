"""Change of omega under lowering the weight of one edge.

``delta_omega_direct`` recomputes every affected term and is the oracle.
The other functions express the same change as a weighted sum of
omega(Lk sigma) over the irreducible simplices sigma through the edge.
"""
from __future__ import annotations

from fractions import Fraction

from ..charney import omega
from ..complex import FlagComplex, link, simplices_containing
from ..coxeter import INF, INFINITE, NotAnEdge, classify, edge_context
from . import coefficients as C


class PreconditionViolated(ValueError):
    pass


class FinitenessViolation(AssertionError):
    """Lowering a weight produced an infinite group; cannot happen for finite inputs."""


def _edge(S: FlagComplex, e) -> tuple:
    u, v = e
    index = {x: i for i, x in enumerate(S.vertices)}
    if u not in index or v not in index or S.graph.weight(u, v) == INF:
        raise NotAnEdge(f"{u}-{v} is not a finite-weight edge")
    return tuple(sorted((u, v), key=index.__getitem__))


def delta_omega_direct(S: FlagComplex, e, u: int) -> Fraction:
    """omega(S') - omega(S) where S' has weight ``u`` on ``e``, summed over simplices through e."""
    e = _edge(S, e)
    m = S.graph.weight(*e)
    if not 2 <= u <= m:
        raise PreconditionViolated(f"new weight {u} must satisfy 2 <= u <= {m}")
    if u == m:
        return Fraction(0)
    g2 = S.graph.with_weight(*e, u)
    total = Fraction(0)
    for s in simplices_containing(S, e):
        t = classify(g2.diagram(s))
        if t is INFINITE:
            raise FinitenessViolation(f"simplex {s} became infinite")
        diff = Fraction(1, t.order) - Fraction(1, S.orders[s])
        total += -diff if len(s) % 2 else diff
    return total


def irreducible_simplices_through(S: FlagComplex, e) -> list:
    """Simplices containing ``e`` whose Coxeter group is irreducible."""
    return [s for s in simplices_containing(S, e) if S.types[s].is_irreducible]


def _link_omega(S: FlagComplex, s) -> Fraction:
    return omega(link(S, s))


def _require_max_weight(S: FlagComplex, bound: int):
    top = S.graph.max_finite_weight()
    if top > bound:
        raise PreconditionViolated(f"complex has an edge of weight {top} > {bound}")


def delta_omega_high(S: FlagComplex, e, m: int, u: int) -> Fraction:
    """(m - u) / (2 m u) * omega(Lk e) for an edge of weight m >= 6 lowered to u."""
    e = _edge(S, e)
    if S.graph.weight(*e) != m:
        raise PreconditionViolated(f"edge {e} has weight {S.graph.weight(*e)}, not {m}")
    if m < 6 or not 2 <= u < m:
        raise PreconditionViolated(f"need m >= 6 and 2 <= u < m, got m={m}, u={u}")
    return Fraction(m - u, 2 * m * u) * _link_omega(S, e)


def delta_omega_5_to_4(S: FlagComplex, e) -> Fraction:
    """1/40 omega(Lk e) - 47/28800 * sum over H_4 simplices sigma through e of omega(Lk sigma)."""
    e = _edge(S, e)
    if S.graph.weight(*e) != 5:
        raise PreconditionViolated("edge must have weight 5")
    _require_max_weight(S, 5)
    total = Fraction(1, 40) * _link_omega(S, e)
    for s in irreducible_simplices_through(S, e):
        (f,) = S.types[s].factors
        if f.family == "H" and f.rank == 4:
            total -= Fraction(47, 28800) * _link_omega(S, s)
    return total


def five_to_four_brackets() -> dict:
    """Coefficients of the weight-4 and weight-5 brackets, and their differences.

    Keys ``"I2(5)"``, ``"H3"``, ``"H4"`` map to ``(after, before, after - before)``.
    """
    F = Fraction
    after = {"I2(5)": F(1, 8), "H3": F(1, 16) - F(1, 48),
             "H4": -F(1, 48) + F(1, 2) * (F(1, 16) - F(1, 48)) + F(1, 384)}
    before = {"I2(5)": F(1, 10), "H3": F(1, 20) - F(1, 120),
              "H4": -F(1, 60) + F(1, 2) * (F(1, 20) - F(1, 120)) + F(1, 14400)}
    return {k: (after[k], before[k], after[k] - before[k]) for k in after}


def delta_omega_4_to_3(S: FlagComplex, e) -> Fraction:
    """Sum of (b_n - b~_n) omega(Lk sigma) over B_n simplices plus (f_4 - f~_4) over F_4 ones."""
    e = _edge(S, e)
    if S.graph.weight(*e) != 4:
        raise PreconditionViolated("edge must have weight 4")
    _require_max_weight(S, 4)
    total = Fraction(0)
    for s in irreducible_simplices_through(S, e):
        (f,) = S.types[s].factors
        if f.family == "B":
            coef = C.coeff_b(f.rank, 3) - C.coeff_b(f.rank, 4)
        elif f.family == "F":
            coef = C.f4_diff()
        else:
            raise AssertionError(f"unexpected {f} through a weight-4 edge")
        total += coef * _link_omega(S, s)
    return total


def three_to_two_coefficient(S: FlagComplex, s, e) -> Fraction:
    """Coefficient (weight 2 minus weight 3) attached to the irreducible simplex ``s``."""
    ctx = edge_context(S.graph.diagram(s), e)
    n = ctx.n
    if ctx.family == "A":
        return C.coeff_a(n, ctx.t, 2) - C.coeff_a(n, ctx.t, 3)
    if ctx.family == "D":
        if ctx.prime:
            return C.coeff_d_prime(n, 2) - C.coeff_d_prime(n, 3)
        return C.coeff_d(n, ctx.t, 2) - C.coeff_d(n, ctx.t, 3)
    if ctx.family == "E":
        return C.e_diff(n, None if ctx.prime else ctx.t)
    raise AssertionError(f"unexpected context {ctx} through a weight-3 edge")


def delta_omega_3_to_2(S: FlagComplex, e) -> Fraction:
    """Sum over A_n^t, D_n', D_n^t, E_n', E_n^t simplices through e of coefficient * omega(Lk)."""
    e = _edge(S, e)
    if S.graph.weight(*e) != 3:
        raise PreconditionViolated("edge must have weight 3")
    _require_max_weight(S, 3)
    return sum((three_to_two_coefficient(S, s, e) * _link_omega(S, s)
                for s in irreducible_simplices_through(S, e)), Fraction(0))


def delta_omega_by_subdiagrams(S: FlagComplex, e, u: int) -> Fraction:
    """Same change for any legal decrease, using coefficients from subdiagram inclusion-exclusion."""
    e = _edge(S, e)
    m = S.graph.weight(*e)
    if not 2 <= u < m:
        raise PreconditionViolated(f"need 2 <= u < {m}")
    total = Fraction(0)
    for s in irreducible_simplices_through(S, e):
        d = S.graph.diagram(s)
        coef = C.diagram_coefficient(d, e, u) - C.diagram_coefficient(d, e, m)
        total += coef * _link_omega(S, s)
    return total


def lemma_for(m: int, u: int):
    """Name of the reduction rule covering m -> u, or None."""
    if m >= 6 and 2 <= u < m:
        return "high"
    return {(5, 4): "five_to_four", (4, 3): "four_to_three", (3, 2): "three_to_two"}.get((m, u))


def delta_omega_formula(S: FlagComplex, e, u: int):
    """Apply the rule matching this decrease; None when no rule applies or its preconditions fail."""
    e = _edge(S, e)
    m = S.graph.weight(*e)
    rule = lemma_for(m, u)
    try:
        if rule == "high":
            return delta_omega_high(S, e, m, u)
        if rule == "five_to_four":
            return delta_omega_5_to_4(S, e)
        if rule == "four_to_three":
            return delta_omega_4_to_3(S, e)
        if rule == "three_to_two":
            return delta_omega_3_to_2(S, e)
    except PreconditionViolated:
        return None
    return None
