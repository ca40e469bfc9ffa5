from fractions import Fraction as F

import pytest
from hypothesis import given

from coxflag.charney import (check_conjecture_instance, omega, omega_by_dimension,
                             omega_right_angled)
from coxflag.complex import WeightedGraph, build_flag_complex
from coxflag.constructions import (coxeter_simplex, cross_polytope_boundary, cycle_graph, join,
                                   octahedron)
from coxflag.coxeter import CoxeterType

from conftest import finite_graphs


@pytest.mark.parametrize("k", range(4, 13))
def test_right_angled_cycles(k):
    S = build_flag_complex(cycle_graph(k))
    assert omega(S) == 1 - F(k, 4)
    rep = check_conjecture_instance(S)
    assert rep.is_odd_sphere and rep.predicted_sign == -1 and rep.satisfied


def test_sixteen_cell():
    S = build_flag_complex(cross_polytope_boundary(4))
    assert omega(S) == 0
    rep = check_conjecture_instance(S)
    assert rep.predicted_sign == 1 and rep.satisfied is True


def test_single_weighted_edge():
    S = build_flag_complex(WeightedGraph("ab", {("a", "b"): 6}))
    assert omega(S) == 1 - 1 + F(1, 12)


def test_even_dimensional_sphere_not_applicable():
    rep = check_conjecture_instance(build_flag_complex(octahedron()))
    assert rep.satisfied is None and rep.predicted_sign is None
    assert "not applicable" in str(rep)


def test_simplex_of_type_a2():
    S = build_flag_complex(coxeter_simplex(CoxeterType("A", 2)))
    # empty, two vertices, the edge with W = S_3
    assert omega(S) == 1 - 2 * F(1, 2) + F(1, 6)


def test_right_angled_formula_rejects_weights():
    with pytest.raises(ValueError):
        omega_right_angled(build_flag_complex(cycle_graph(5, weight=3)))


@given(finite_graphs())
def test_routes_agree(g):
    S = build_flag_complex(g)
    assert omega(S) == omega_by_dimension(S)
    ra = WeightedGraph(g.vertices, {e: 2 for e in g.edges()})
    T = build_flag_complex(ra)
    assert omega(T) == omega_right_angled(T) == omega_by_dimension(T)


@given(finite_graphs(max_vertices=5), finite_graphs(max_vertices=4))
def test_join_is_multiplicative(a, b):
    b = WeightedGraph([f"b{v}" for v in b.vertices],
                      {(f"b{u}", f"b{v}"): m for (u, v), m in b.weighted_edges()})
    assert omega(build_flag_complex(join(a, b))) == (omega(build_flag_complex(a))
                                                    * omega(build_flag_complex(b)))
