"""
Homology spheres and their certificates
=======================================

A complex passes the generalised homology sphere test when it and every
link have the homology of spheres of the right dimension. When the
test fails, the first offending link is reported.
"""
from coxflag.complex import WeightedGraph, build_flag_complex, link
from coxflag.constructions import cross_polytope_boundary, cycle_graph
from coxflag.homology import homology, is_ghs

for d in range(1, 5):
    S = build_flag_complex(cross_polytope_boundary(d))
    print(f"boundary of the {d}-cross-polytope: {homology(S)}; GHS^{d - 1}: {bool(is_ghs(S, d - 1))}")

###############################################################################
# Two triangles sharing an edge form a disc.

disc = WeightedGraph("abcd", {p: 2 for p in [("a", "b"), ("b", "c"), ("a", "c"),
                                             ("b", "d"), ("c", "d")]})
print("\ndisc:", is_ghs(build_flag_complex(disc), 2).failure)

###############################################################################
# A square with a whisker has the homology of a circle, so the failure
# is found in a vertex link instead.

sq = cycle_graph(4)
whisker = WeightedGraph(sq.vertices + ("x",), dict(sq.weighted_edges()) | {("c00", "x"): 2})
S = build_flag_complex(whisker)
print("whisker homology:", homology(S))
fail = is_ghs(S, 1).failure
print("certificate:", fail)
print("that link:", homology(link(S, fail.simplex)))
