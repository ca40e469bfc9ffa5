"""Exact Charney-Davis computations for edge-weighted flag complexes.

Flag complexes whose simplices carry finite Coxeter groups, the
alternating sum omega, integral homology and the edge-weight reduction
calculus, all in exact rational arithmetic.
"""
from .charney import check_conjecture_instance, omega, omega_by_dimension, omega_right_angled
from .complex import (FlagComplex, InfiniteCoxeterGroup, WeightedGraph, build_flag_complex,
                      link, parse_complex, read_complex, serialize_complex, write_complex)
from .coxeter import (INF, INFINITE, CoxeterGraph, CoxeterType, TypeDecomposition, classify,
                      classify_component, edge_context, group_order)
from .exact import TruncatedSeries, bernoulli, genocchi
from .homology import homology, is_ghs, is_homology_manifold
from .reduction.deltas import delta_omega_direct, delta_omega_formula
from .reduction.pipeline import reduce_edge, reduce_pipeline

__version__ = "0.1.0"

__all__ = [
    "INF", "INFINITE", "CoxeterGraph", "CoxeterType", "FlagComplex", "InfiniteCoxeterGroup",
    "TruncatedSeries", "TypeDecomposition", "WeightedGraph", "bernoulli", "build_flag_complex",
    "check_conjecture_instance", "classify", "classify_component", "delta_omega_direct",
    "delta_omega_formula", "edge_context", "genocchi", "group_order", "homology", "is_ghs",
    "is_homology_manifold", "link", "omega", "omega_by_dimension", "omega_right_angled",
    "parse_complex", "read_complex", "reduce_edge", "reduce_pipeline", "serialize_complex",
    "write_complex",
]
