"""
Recognising finite Coxeter groups
=================================

Every simplex of a weighted flag complex carries the Coxeter group read
off from its edge labels. Here we walk through the finite irreducible
types, scramble their vertex labels and let the classifier find them
again, then look at a few diagrams that only just fail to be finite.
"""
import random

from coxflag.coxeter import (INFINITE, CoxeterGraph, all_types, classify, classify_component,
                             edge_context, standard_diagram)

rng = random.Random(0)

print("type       order")
for t in all_types(8, max_m=7):
    g = standard_diagram(t)
    names = [f"v{i}" for i in rng.sample(range(t.rank), t.rank)]
    scrambled = CoxeterGraph(names, {(names[u], names[v]): m for (u, v), m in g.pairs()})
    assert classify_component(scrambled) == t
    print(f"{t.name:8s} {t.order:>10d}")

###############################################################################
# Products are reported factor by factor.

g = CoxeterGraph(range(6), {(0, 1): 5, (1, 2): 3, (3, 4): 4, (4, 5): 3})
print("\nreducible diagram:", classify(g), "of order", classify(g).order)

###############################################################################
# Extending a finite diagram by one vertex usually breaks finiteness.

for labels in ([3, 3], [4, 3, 4], [5, 3, 3, 3], [6, 3]):
    verdict = classify(CoxeterGraph.path(labels))
    print(f"path {labels}: {'infinite' if verdict is INFINITE else verdict}")

###############################################################################
# Where does an edge sit inside its diagram? The reduction coefficients
# depend on exactly this.

e7 = standard_diagram(all_types(7)[-1])
for e in e7.edges():
    print("E7 edge", e, "->", edge_context(e7, e))
