"""Step-by-step reduction of a weighted flag complex to its right-angled version."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..charney import omega
from ..complex import FlagComplex, build_flag_complex, link
from .deltas import PreconditionViolated, _edge, delta_omega_direct, delta_omega_formula, lemma_for


@dataclass(frozen=True)
class ReductionStep:
    edge: tuple
    old_weight: int
    new_weight: int
    lemma_used: Optional[str]
    delta_direct: Fraction
    delta_formula: Optional[Fraction]
    omega_before: Fraction
    omega_after: Fraction
    link_omega: Fraction = Fraction(0)  # omega(Lk e) before the change

    @property
    def signs(self) -> tuple:
        """(sign of omega(Lk e), sign of the direct change); reported, not interpreted."""
        sign = lambda x: (x > 0) - (x < 0)  # noqa: E731
        return sign(self.link_omega), sign(self.delta_direct)

    @property
    def agreed(self) -> Optional[bool]:
        if self.delta_formula is None:
            return None
        return self.delta_formula == self.delta_direct

    def as_dict(self) -> dict:
        q = lambda x: None if x is None else str(x)  # noqa: E731
        return {
            "edge": list(self.edge),
            "old_weight": self.old_weight,
            "new_weight": self.new_weight,
            "lemma": self.lemma_used,
            "omega_before": q(self.omega_before),
            "omega_after": q(self.omega_after),
            "delta_direct": q(self.delta_direct),
            "delta_formula": q(self.delta_formula),
            "agreed": self.agreed,
            "omega_link_edge": q(self.link_omega),
            "sign_omega_link_edge": self.signs[0],
            "sign_delta": self.signs[1],
        }


def reduce_edge(S: FlagComplex, e, u: int) -> tuple:
    """Lower ``e`` to weight ``u``; returns ``(ReductionStep, new complex)``."""
    e = _edge(S, e)
    m = S.graph.weight(*e)
    if not 2 <= u < m:
        raise PreconditionViolated(f"cannot lower weight {m} to {u}")
    direct = delta_omega_direct(S, e, u)
    formula = delta_omega_formula(S, e, u)
    before = omega(S)
    new = build_flag_complex(S.graph.with_weight(*e, u))
    after = omega(new)
    if after - before != direct:
        raise AssertionError(f"direct change {direct} disagrees with recomputation {after - before}")
    step = ReductionStep(e, m, u, lemma_for(m, u), direct, formula, before, after,
                         omega(link(S, e)))
    return step, new


def next_step(S: FlagComplex) -> Optional[tuple]:
    """Edge and target weight of the next scheduled step, or None if right-angled.

    Picks the lexicographically least edge among those of the highest
    finite weight; weights >= 6 drop straight to 2, smaller ones by one.
    """
    top = S.graph.max_finite_weight()
    if top <= 2:
        return None
    edge = min(e for e, m in S.graph.weighted_edges() if m == top)
    return edge, (2 if top >= 6 else top - 1)


@dataclass(frozen=True)
class PipelineResult:
    steps: tuple
    initial: FlagComplex
    final: FlagComplex

    @property
    def total_delta(self) -> Fraction:
        return sum((s.delta_direct for s in self.steps), Fraction(0))

    @property
    def all_agreed(self) -> bool:
        return all(s.agreed is not False for s in self.steps)


def reduce_pipeline(S: FlagComplex) -> PipelineResult:
    """Lower weights highest-first until every finite weight is 2."""
    steps = []
    current = S
    while (nxt := next_step(current)) is not None:
        step, current = reduce_edge(current, *nxt)
        steps.append(step)
    return PipelineResult(tuple(steps), S, current)
