from math import factorial

import pytest
from hypothesis import given, strategies as st

from coxflag.coxeter import (INF, INFINITE, CoxeterGraph, CoxeterType, NotAnEdge, all_types,
                             classify, classify_component, decompose, edge_context,
                             find_isomorphism, group_order, standard_diagram)

# Cardinalities as usually tabulated.
EXCEPTIONAL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152,
                      "H3": 120, "H4": 14400}


def expected_order(t: CoxeterType) -> int:
    n = t.rank
    if t.family == "A":
        return factorial(n + 1)
    if t.family == "B":
        return 2**n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    if t.family == "I":
        return 2 * t.m
    return EXCEPTIONAL_ORDERS[t.name]


def relabel(g: CoxeterGraph, perm) -> CoxeterGraph:
    names = {v: f"v{perm[i]}" for i, v in enumerate(g.vertices)}
    return CoxeterGraph(names.values(), {(names[u], names[v]): m for (u, v), m in g.pairs()})


TYPES = all_types(9)


@pytest.mark.parametrize("t", TYPES, ids=lambda t: t.name)
def test_standard_diagram_roundtrip(t):
    assert classify_component(standard_diagram(t)) == t
    assert t.order == expected_order(t)


def test_type_counts():
    names = [t.name for t in TYPES]
    assert names.count("E6") == 1 and "E9" not in names
    assert sum(t.family == "I" for t in TYPES) == 8


@pytest.mark.parametrize("name", ["A1", "B2", "I2(5)", "D4", "E8", "F4", "H4", "I2(12)"])
def test_parse_name_roundtrip(name):
    assert CoxeterType.parse(name).name == name


@pytest.mark.parametrize("args", [("D", 3), ("E", 5), ("E", 9), ("F", 3), ("H", 5), ("I", 2),
                                  ("A", 0), ("B", 1), ("X", 2)])
def test_invalid_types(args):
    with pytest.raises(ValueError):
        CoxeterType(*args)


def test_rank_two_labels():
    assert classify_component(CoxeterGraph.path([3])).name == "A2"
    assert classify_component(CoxeterGraph.path([4])).name == "B2"
    assert classify_component(CoxeterGraph.path([6])).name == "I2(6)"


@pytest.mark.parametrize("labels", [
    [6, 3],          # G2 extended
    [4, 3, 4],       # affine C2
    [5, 3, 3, 3],    # beyond H4
    [4, 3, 3, 4],
    [3, 5, 3],
    [INF],
])
def test_infinite_paths(labels):
    assert classify(CoxeterGraph.path(labels)) is INFINITE


def test_infinite_triangle_and_star():
    tri = CoxeterGraph(range(3), {(0, 1): 3, (1, 2): 3, (0, 2): 3})
    star = CoxeterGraph(range(5), {(0, 4): 3, (1, 4): 3, (2, 4): 3, (3, 4): 3})
    assert classify(tri) is INFINITE
    assert classify(star) is INFINITE


def test_e9_is_infinite():
    w = {(i, i + 1): 3 for i in range(7)}
    w[(2, 8)] = 3
    assert classify(CoxeterGraph(range(9), w)) is INFINITE


def test_infinite_marker_is_falsy():
    assert not INFINITE


def test_reducible_decomposition():
    g = CoxeterGraph(range(5), {(0, 1): 4, (2, 3): 3, (3, 4): 5})
    d = classify(g)
    assert d.name == "B2 x H3"
    assert group_order(d) == 8 * 120
    assert [c.vertices for c in decompose(g)] == [(0, 1), (2, 3, 4)]


def test_empty_diagram():
    d = classify(CoxeterGraph([]))
    assert d.name == "1" and d.order == 1


def test_classify_component_requires_connected():
    with pytest.raises(ValueError):
        classify_component(CoxeterGraph(range(2)))


@given(st.sampled_from(TYPES), st.randoms())
def test_relabeling_invariance(t, rnd):
    g = standard_diagram(t)
    perm = list(range(t.rank))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert classify_component(h) == t
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert all(g.weight(u, v) == h.weight(iso[u], iso[v]) for (u, v), _ in g.pairs())


@given(st.sampled_from([t for t in TYPES if t.rank >= 2]), st.data())
def test_vertex_deletion_stays_finite(t, data):
    g = standard_diagram(t)
    drop = data.draw(st.sets(st.sampled_from(g.vertices), max_size=t.rank - 1))
    assert classify(g.induced(set(g.vertices) - drop)) is not INFINITE


@given(st.sampled_from([t for t in TYPES if t.rank >= 2]), st.data())
def test_lowering_a_weight_stays_finite(t, data):
    g = standard_diagram(t)
    e = data.draw(st.sampled_from(g.edges()))
    u = data.draw(st.integers(2, g.weight(*e) - 1))
    assert classify(g.with_weight(*e, u)) is not INFINITE


@pytest.mark.parametrize("t, edge, name", [
    ("A5", (2, 3), "A_5^2"),
    ("A5", (0, 1), "A_5^1"),
    ("A5", (3, 4), "A_5^1"),
    ("B4", (0, 1), "B_4^1"),
    ("D5", (0, 2), "D_5'"),
    ("D5", (1, 2), "D_5'"),
    ("D5", (2, 3), "D_5^2"),
    ("D5", (3, 4), "D_5^3"),
    ("D4", (2, 3), "D_4'"),
    ("E6", (2, 5), "E_6'"),
    ("E6", (3, 4), "E_6^1"),
    ("E7", (2, 6), "E_7'"),
    ("E7", (4, 5), "E_7^5"),
    ("F4", (2, 3), "F_4^1"),
    ("I2(7)", (0, 1), "I_2(7)"),
])
def test_edge_context_examples(t, edge, name):
    assert edge_context(standard_diagram(CoxeterType.parse(t)), edge).name == name


def test_edge_context_rejects_non_edge():
    with pytest.raises(NotAnEdge):
        edge_context(standard_diagram(CoxeterType("A", 4)), (0, 2))


@given(st.sampled_from([t for t in TYPES if t.rank >= 2]), st.randoms(), st.data())
def test_edge_context_relabeling_invariance(t, rnd, data):
    g = standard_diagram(t)
    perm = list(range(t.rank))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    u, v = data.draw(st.sampled_from(g.edges()))
    assert edge_context(g, (u, v)) == edge_context(h, (f"v{perm[u]}", f"v{perm[v]}"))
