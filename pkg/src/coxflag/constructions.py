"""Ready-made weighted graphs: cycles, cross-polytopes, Coxeter simplices, random inputs."""
from __future__ import annotations

import random
from itertools import combinations

from .complex import InfiniteCoxeterGroup, WeightedGraph, build_flag_complex
from .coxeter import INF, INFINITE, CoxeterType, classify, standard_diagram


def cycle_graph(k: int, weight: int = 2, prefix: str = "c") -> WeightedGraph:
    """k-cycle ``c00 - c01 - ... - c(k-1) - c00`` with all edges of ``weight``."""
    names = [f"{prefix}{i:02d}" for i in range(k)]
    return WeightedGraph(names, {(names[i], names[(i + 1) % k]): weight for i in range(k)})


def cross_polytope_boundary(d: int) -> WeightedGraph:
    """Boundary of the d-dimensional cross-polytope: 2d vertices, antipodes unjoined, weight 2.

    d = 3 is the octahedron, d = 4 the boundary of the 16-cell.
    """
    names = [f"{s}{i}" for i in range(d) for s in "pm"]
    w = {}
    for a, b in combinations(names, 2):
        if a[1:] != b[1:]:
            w[(a, b)] = 2
    return WeightedGraph(names, w)


def octahedron() -> WeightedGraph:
    return cross_polytope_boundary(3)


def coxeter_simplex(t: CoxeterType, prefix: str = "x") -> WeightedGraph:
    """Single simplex whose 1-skeleton is the diagram of ``t`` (non-edges weight 2).

    Vertex ``f"{prefix}{i}"`` corresponds to vertex ``i`` of
    :func:`~coxflag.coxeter.standard_diagram`.
    """
    g = standard_diagram(t)
    name = {v: f"{prefix}{v}" for v in g.vertices}
    return WeightedGraph(name.values(), {(name[u], name[v]): m for (u, v), m in g.pairs()})


def join(a: WeightedGraph, b: WeightedGraph, weight: int = 2) -> WeightedGraph:
    """Simplicial join: every vertex of ``a`` is joined to every vertex of ``b`` with ``weight``."""
    if set(a.vertices) & set(b.vertices):
        raise ValueError("join needs disjoint vertex sets")
    w = dict(a.weighted_edges())
    w.update(b.weighted_edges())
    for u in a.vertices:
        for v in b.vertices:
            w[(u, v)] = weight
    return WeightedGraph(a.vertices + b.vertices, w)


def suspension(g: WeightedGraph, names=("n", "s")) -> WeightedGraph:
    """Join with two unjoined apexes."""
    return join(g, WeightedGraph(names))


def random_finite_type_graph(rng: random.Random, n_vertices: int = 7, edge_prob: float = 0.6,
                             weights=(3, 3, 3, 4, 4, 5, 6, 7), raise_prob: float = 0.5,
                             prefix: str = "r") -> WeightedGraph:
    """Random graph whose flag complex has only finite Coxeter groups.

    Starts from a right-angled random graph and raises edge weights one at a
    time, keeping a raise only when every clique through the edge stays finite.
    """
    names = [f"{prefix}{i:02d}" for i in range(n_vertices)]
    w = {p: 2 for p in combinations(names, 2) if rng.random() < edge_prob}
    g = WeightedGraph(names, w)
    edges = g.edges()
    rng.shuffle(edges)
    for u, v in edges:
        if rng.random() >= raise_prob:
            continue
        trial = g.with_weight(u, v, rng.choice(weights))
        if _edge_cliques_finite(trial, u, v):
            g = trial
    return g


def _edge_cliques_finite(g: WeightedGraph, u, v) -> bool:
    common = sorted(g.neighbours(u) & g.neighbours(v))
    nb = {x: g.neighbours(x) for x in common}
    stack = [((u, v), common)]
    while stack:
        clique, cands = stack.pop()
        if classify(g.diagram(tuple(sorted(clique)))) is INFINITE:
            return False
        for k, x in enumerate(cands):
            stack.append((clique + (x,), [y for y in cands[k + 1:] if y in nb[x]]))
    return True


def random_sphere_like(rng: random.Random) -> WeightedGraph:
    """A random weighting of a cycle or a suspension of a cycle (small spheres)."""
    k = rng.randint(4, 8)
    g = cycle_graph(k)
    if rng.random() < 0.5:
        g = suspension(g)
    edges = g.edges()
    rng.shuffle(edges)
    for u, v in edges:
        trial = g.with_weight(u, v, rng.choice((3, 4, 5, 6)))
        try:
            build_flag_complex(trial)
        except InfiniteCoxeterGroup:
            continue
        g = trial
    return g


__all__ = [
    "INF", "cycle_graph", "cross_polytope_boundary", "octahedron", "coxeter_simplex", "join",
    "suspension", "random_finite_type_graph", "random_sphere_like",
]
