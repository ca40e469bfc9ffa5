"""The verification battery behind ``coxflag verify``.

Each check recomputes a constant or identity from the recurrences and
compares it with the expected closed form, exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DEFAULT_ORDER
from .reduction import coefficients as C
from .reduction import identities as I
from .reduction.deltas import five_to_four_brackets

IDENTITY_MAX_N = 30

F4_DIFF = Fraction(-17, 5760)
E_DIFFS = {6: Fraction(13, 103680), 7: Fraction(0), 8: Fraction(-2537, 696729600)}
FIVE_TO_FOUR = {"link": Fraction(1, 40), "H4": Fraction(47, 28800)}


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    detail: str = ""


def _range_check(name, predicate, lo, hi) -> Check:
    bad = [n for n in range(lo, hi + 1) if not predicate(n)]
    if bad:
        return Check(f"{name} fails for n = {bad}", False)
    return Check(f"{name} holds for n = {lo}..{hi}", True)


def _closed_form_checks(max_n: int) -> list:
    table = C.build_diff_table(max_n)
    out = []
    bad = [n for n, v in table.beta.items() if v != C.beta_closed(n)]
    out.append(Check(f"beta_n closed form, n = 2..{max_n}", not bad, f"bad n: {bad}" if bad else ""))
    bad = [k for k, v in table.alpha.items() if v != C.alpha_closed(k[0])]
    out.append(Check(f"alpha_(n,t) closed form, n = 2..{max_n}", not bad,
                     f"bad (n, t): {bad}" if bad else ""))
    bad = [n for n, v in table.delta_prime.items() if v != C.delta_closed(n)]
    out.append(Check(f"delta'_n closed form, n = 4..{max_n}", not bad,
                     f"bad n: {bad}" if bad else ""))
    bad = [k for k, v in table.delta.items() if v != C.delta_closed(k[0])]
    out.append(Check(f"delta_(n,t) closed form, n = 4..{max_n}", not bad,
                     f"bad (n, t): {bad}" if bad else ""))
    return out


def _sporadic_checks() -> list:
    out = []
    got = C.f4_diff()
    out.append(Check(f"f4 - f4~ = {got}", got == F4_DIFF))
    for n, want in E_DIFFS.items():
        values = {t: C.e_diff(n, t) for m, t in C.e_kinds() if m == n}
        distinct = set(values.values())
        if distinct == {want}:
            out.append(Check(f"E{n} diffs = {want}", True))
        else:
            shown = ", ".join(f"{'vertical' if t is None else t}: {v}" for t, v in values.items())
            out.append(Check(f"E{n} diffs = {want}", False, shown))
    # Differences of the weight-4 and weight-5 brackets.
    br = five_to_four_brackets()
    link_coef, h3_coef, h4_coef = (br[k][2] for k in ("I2(5)", "H3", "H4"))
    out.append(Check(f"5->4 link coefficient = {link_coef}", link_coef == FIVE_TO_FOUR["link"]))
    out.append(Check(f"5->4 H3 bracket difference = {h3_coef}", h3_coef == 0))
    out.append(Check(f"5->4 H4 coefficient = {-h4_coef}", -h4_coef == FIVE_TO_FOUR["H4"]))
    return out


def run_verification(max_n: int = 12, series_order: int = DEFAULT_ORDER) -> list:
    """All checks as a list of :class:`Check` rows (deterministic order)."""
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    if series_order < 4:
        raise ValueError("series_order must be >= 4")
    rows = [
        _range_check("convolution identity", I.check_convolution_identity, 2, IDENTITY_MAX_N),
        _range_check("five-term identity", I.check_five_term_identity, 3, IDENTITY_MAX_N),
    ]
    rows += _closed_form_checks(max_n)
    rows += _sporadic_checks()
    rep = I.verify_generating_functions(series_order, max_n)
    detail = "; ".join(f"{m[0]} at {m[1]}" for m in rep.mismatches[:5])
    rows.append(Check(f"beta generating function to order {series_order}", rep.beta_ok, detail))
    rows.append(Check(f"delta' generating function to order {series_order}",
                      rep.delta_prime_ok, detail))
    rows.append(Check(f"P_n(y) closed form for n = 2..{max_n}", rep.p_ok, detail))
    return rows
