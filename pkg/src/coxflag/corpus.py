"""Test corpus for comparing the reduction formulas with direct recomputation.

Every finite irreducible type of rank <= 8 appears as a simplex, joined
with weight-2 edges to a cone point and to a pentagon. Both have nonzero
omega, and omega is multiplicative under joins, so the link terms in the
formulas do not vanish.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .complex import FlagComplex, WeightedGraph, build_flag_complex
from .constructions import (coxeter_simplex, cycle_graph, join, random_finite_type_graph,
                            random_sphere_like)
from .coxeter import all_types
from .reduction.deltas import (delta_omega_3_to_2, delta_omega_4_to_3, delta_omega_5_to_4,
                               delta_omega_by_subdiagrams, delta_omega_direct, delta_omega_high)
from .reduction.pipeline import reduce_pipeline


def oracle_corpus(seed: int = 0, n_random: int = 12, max_rank: int = 8) -> list:
    """``(name, WeightedGraph)`` pairs; deterministic for a given seed."""
    out = []
    for t in all_types(max_rank):
        base = coxeter_simplex(t)
        out.append((f"{t.name}*pt", join(base, WeightedGraph(["p"]))))
        out.append((f"{t.name}*C5", join(base, cycle_graph(5, prefix="z"))))
    rng = random.Random(seed)
    for i in range(n_random):
        out.append((f"random{i:02d}", random_finite_type_graph(rng, n_vertices=rng.randint(5, 8))))
        out.append((f"sphere{i:02d}", random_sphere_like(rng)))
    return out


@dataclass(frozen=True)
class OracleRecord:
    complex_name: str
    edge: tuple
    old_weight: int
    new_weight: int
    rule: str
    formula: Fraction
    direct: Fraction

    @property
    def agreed(self) -> bool:
        return self.formula == self.direct


def _rule_values(S: FlagComplex, e, m: int):
    top = S.graph.max_finite_weight()
    if m >= 6:
        for u in range(2, m):
            yield "high", u, delta_omega_high(S, e, m, u)
    elif m == 5 and top <= 5:
        yield "five_to_four", 4, delta_omega_5_to_4(S, e)
    elif m == 4 and top <= 4:
        yield "four_to_three", 3, delta_omega_4_to_3(S, e)
    elif m == 3 and top <= 3:
        yield "three_to_two", 2, delta_omega_3_to_2(S, e)


def check_complex(name: str, graph: WeightedGraph, subdiagrams: bool = True,
                  pipeline: bool = True) -> list:
    """Compare every applicable formula with the direct change on one complex.

    Also runs the reduction pipeline (whose steps always satisfy the rule
    preconditions) and, optionally, the subdiagram route for every legal
    decrease.
    """
    S = build_flag_complex(graph)
    records = []
    for e, m in graph.weighted_edges():
        if m < 3:
            continue
        for rule, u, value in _rule_values(S, e, m):
            records.append(OracleRecord(name, e, m, u, rule, value, delta_omega_direct(S, e, u)))
        if subdiagrams:
            for u in range(2, m):
                records.append(OracleRecord(name, e, m, u, "subdiagrams",
                                            delta_omega_by_subdiagrams(S, e, u),
                                            delta_omega_direct(S, e, u)))
    if pipeline:
        for step in reduce_pipeline(S).steps:
            records.append(OracleRecord(name, step.edge, step.old_weight, step.new_weight,
                                        f"pipeline:{step.lemma_used}",
                                        step.delta_formula, step.delta_direct))
    return records


def first_disagreement(records) -> Optional[OracleRecord]:
    return next((r for r in records if not r.agreed), None)
