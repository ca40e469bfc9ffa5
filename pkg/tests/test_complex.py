from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from coxflag.complex import (BadWeight, DuplicateEdge, InfiniteCoxeterGroup, ParseError,
                             SimplexNotInComplex, UnknownVertex, WeightedGraph,
                             build_flag_complex, enumerate_cliques, link, parse_complex,
                             read_complex, serialize_complex, simplices_containing,
                             write_complex)
from coxflag.constructions import cross_polytope_boundary, cycle_graph, octahedron
from coxflag.coxeter import INF, NotAnEdge

from conftest import finite_graphs


def test_octahedron_f_vector():
    S = build_flag_complex(octahedron())
    assert S.f_vector() == [1, 6, 12, 8]
    assert S.dimension == 2


def test_cycle_has_no_triangles():
    S = build_flag_complex(cycle_graph(6))
    assert S.f_vector() == [1, 6, 6]


def test_empty_graph_gives_empty_simplex_only():
    S = build_flag_complex(WeightedGraph([]))
    assert S.simplices == ((),) and S.dimension == -1


def test_infinite_triangle_rejected():
    g = WeightedGraph("abc", {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3})
    with pytest.raises(InfiniteCoxeterGroup) as info:
        build_flag_complex(g)
    assert info.value.simplex == ("a", "b", "c")


def test_simplex_types_and_orders():
    g = WeightedGraph("abc", {("a", "b"): 4, ("b", "c"): 3, ("a", "c"): 2})
    S = build_flag_complex(g)
    assert S.type_of(("a", "b", "c")).name == "B3"
    assert S.order(("a", "b", "c")) == 48
    assert S.order(("a", "c")) == 4
    assert S.order(()) == 1


def test_link_in_octahedron_is_square():
    S = build_flag_complex(octahedron())
    L = link(S, ("p0",))
    assert L.vertices == ("m1", "m2", "p1", "p2")
    assert L.f_vector() == [1, 4, 4]
    assert link(S, ()).simplices == S.simplices


def test_link_of_missing_simplex():
    S = build_flag_complex(octahedron())
    with pytest.raises(SimplexNotInComplex):
        link(S, ("p0", "m0"))


def test_simplices_containing():
    S = build_flag_complex(cross_polytope_boundary(3))
    assert len(simplices_containing(S, ("p0", "p1"))) == 3
    with pytest.raises(NotAnEdge):
        simplices_containing(S, ("p0", "m0"))


def test_with_weight_inf_removes_edge():
    g = cycle_graph(4)
    h = g.with_weight("c00", "c01", INF)
    assert ("c00", "c01") not in h.edges()
    assert h.with_weight("c00", "c01", 2) == g


def test_parse_roundtrip_and_comments(tmp_path):
    text = "# a weighted square\nv a\nv b\nv c\nv d  # last\ne a b 5\ne b c 2\ne c d 3\ne d a 2\n"
    g = parse_complex(text)
    assert g.weight("a", "b") == 5 and g.weight("a", "c") == INF
    assert parse_complex(serialize_complex(g)) == g
    path = tmp_path / "sq.txt"
    write_complex(path, g)
    assert read_complex(path) == g


@pytest.mark.parametrize("text, exc, lineno", [
    ("v a\nv b\ne a b\n", ParseError, 3),
    ("v a\nv b\ne a b 3\ne b a 4\n", DuplicateEdge, 4),
    ("v a\ne a z 3\n", UnknownVertex, 2),
    ("v a\nv b\ne a b 1\n", BadWeight, 3),
    ("v a\nv b\ne a b x\n", BadWeight, 3),
    ("v a\nv a\n", ParseError, 2),
    ("q a\n", ParseError, 1),
])
def test_parse_errors(text, exc, lineno):
    with pytest.raises(exc) as info:
        parse_complex(text)
    assert info.value.lineno == lineno


@given(finite_graphs())
def test_cliques_match_brute_force(g):
    S = build_flag_complex(g)
    brute = {()}
    for k in range(1, len(g.vertices) + 1):
        for c in combinations(g.vertices, k):
            if all(g.weight(u, v) != INF for u, v in combinations(c, 2)):
                brute.add(c)
    assert set(S.simplices) == brute
    assert list(S.simplices) == enumerate_cliques(g)


@given(finite_graphs(), st.data())
def test_full_subcomplex_closure(g, data):
    keep = data.draw(st.sets(st.sampled_from(g.vertices)))
    S = build_flag_complex(g)
    T = build_flag_complex(g.induced(keep))
    assert set(T.simplices) == {s for s in S.simplices if keep.issuperset(s)}
    assert all(T.orders[s] == S.orders[s] for s in T.simplices)


@given(finite_graphs(), st.data())
def test_link_of_link(g, data):
    S = build_flag_complex(g)
    sigma = data.draw(st.sampled_from(S.simplices))
    L = link(S, sigma)
    tau = data.draw(st.sampled_from(L.simplices))
    both = tuple(v for v in S.vertices if v in sigma or v in tau)
    assert link(L, tau).simplices == link(S, both).simplices
