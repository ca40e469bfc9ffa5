"""
Lowering edge weights one step at a time
========================================

Each weight change alters omega only through the simplices containing
the edge. The rule-based formulas express that change through omegas
of links; we compare them with direct recomputation along a full
reduction to the right-angled complex.
"""
from pathlib import Path

from coxflag.charney import omega
from coxflag.complex import build_flag_complex, read_complex
from coxflag.constructions import coxeter_simplex, cycle_graph, join
from coxflag.coxeter import CoxeterType
from coxflag.reduction.deltas import delta_omega_3_to_2, delta_omega_direct
from coxflag.reduction.pipeline import reduce_pipeline

here = Path(__file__).parent
S = build_flag_complex(read_complex(here / "data" / "mixed_pentagon.txt"))
res = reduce_pipeline(S)
for step in res.steps:
    print(f"{step.edge} {step.old_weight}->{step.new_weight} [{step.lemma_used}] "
          f"direct {step.delta_direct}, formula {step.delta_formula}")
print("sum of steps:", res.total_delta, "  omega change:", omega(res.final) - omega(S))

###############################################################################
# An E8 simplex joined to a pentagon: lowering the vertical edge.

E8 = join(coxeter_simplex(CoxeterType("E", 8)), cycle_graph(5, prefix="z"))
S = build_flag_complex(E8)
e = ("x2", "x7")
print("\nE8 * pentagon, vertical edge:", delta_omega_3_to_2(S, e), "=", delta_omega_direct(S, e, 2))
