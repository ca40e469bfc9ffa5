"""
The alternating sum omega on small spheres
==========================================

For right-angled complexes omega only depends on the f-vector. Odd
spheres are predicted to satisfy a sign condition; we check it on
polygons, the 16-cell and some weighted polygons.
"""
import random

from coxflag.charney import check_conjecture_instance, omega, omega_right_angled
from coxflag.complex import build_flag_complex
from coxflag.constructions import cross_polytope_boundary, cycle_graph, random_sphere_like

for k in range(4, 9):
    S = build_flag_complex(cycle_graph(k))
    print(f"{k}-gon: f = {S.f_vector()}, omega = {omega(S)} (f-vector formula {omega_right_angled(S)})")

S = build_flag_complex(cross_polytope_boundary(4))
print("16-cell boundary:", check_conjecture_instance(S))

###############################################################################
# Weighted polygons: heavier labels make the edge terms smaller, but the
# sign survives.

rng = random.Random(7)
for _ in range(6):
    S = build_flag_complex(random_sphere_like(rng))
    labels = sorted(m for _, m in S.graph.weighted_edges())
    print(f"labels {labels}: {check_conjecture_instance(S)}")
