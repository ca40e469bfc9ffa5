"""Edge-weighted flag complexes.

A :class:`WeightedGraph` is the single source of truth: its simplices are
the cliques of the graph formed by the finite-weight pairs, and each
simplex carries the Coxeter group read off from its 1-skeleton.
Simplices are sorted tuples of vertex ids; ``()`` is the empty simplex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .coxeter import INF, INFINITE, CoxeterGraph, NotAnEdge, TypeDecomposition, classify


class InfiniteCoxeterGroup(ValueError):
    """Some simplex spans a diagram whose Coxeter group is infinite."""

    def __init__(self, simplex):
        super().__init__(f"simplex {list(simplex)} has an infinite Coxeter group")
        self.simplex = simplex


class SimplexNotInComplex(KeyError):
    pass


class ComplexFormatError(ValueError):
    """Base class for errors in the text format; ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno


class ParseError(ComplexFormatError):
    pass


class DuplicateEdge(ComplexFormatError):
    pass


class UnknownVertex(ComplexFormatError):
    pass


class BadWeight(ComplexFormatError):
    pass


def dim(simplex) -> int:
    return len(simplex) - 1


class WeightedGraph:
    """Vertices plus a symmetric weight in {2, 3, ...} or INF on every pair.

    Only finite weights are stored; absent pairs have weight INF.
    """

    __slots__ = ("vertices", "_w")

    def __init__(self, vertices: Iterable[str], weights: Mapping | None = None):
        verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        w = {}
        for pair, m in (weights or {}).items():
            u, v = tuple(pair)
            if u == v or u not in vset or v not in vset:
                raise ValueError(f"bad vertex pair {pair!r}")
            if m == INF:
                continue
            if isinstance(m, bool) or int(m) != m or m < 2:
                raise ValueError(f"weight must be an integer >= 2 or INF, got {m!r}")
            w[frozenset((u, v))] = int(m)
        self.vertices = verts
        self._w = w

    def weight(self, u, v):
        return self._w.get(frozenset((u, v)), INF)

    def edges(self) -> list:
        """Finite-weight pairs as sorted tuples, in lexicographic order."""
        return sorted(tuple(sorted(p)) for p in self._w)

    def weighted_edges(self) -> list:
        return [(e, self._w[frozenset(e)]) for e in self.edges()]

    def neighbours(self, u) -> set:
        return {v for v in self.vertices if v != u and frozenset((u, v)) in self._w}

    def with_weight(self, u, v, m) -> "WeightedGraph":
        w = dict(self._w)
        key = frozenset((u, v))
        if m == INF:
            w.pop(key, None)
        else:
            w[key] = m
        return WeightedGraph(self.vertices, w)

    def induced(self, subset: Iterable[str]) -> "WeightedGraph":
        sub = set(subset)
        return WeightedGraph(sub, {p: m for p, m in self._w.items() if p <= sub})

    def diagram(self, simplex) -> CoxeterGraph:
        """Coxeter graph of the 1-skeleton of ``simplex``."""
        return CoxeterGraph(simplex, {(u, v): self.weight(u, v)
                                      for u, v in combinations(simplex, 2)})

    def max_finite_weight(self) -> int:
        return max(self._w.values(), default=2)

    def is_right_angled(self) -> bool:
        return all(m == 2 for m in self._w.values())

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._w == other._w

    def __hash__(self):
        return hash((self.vertices, frozenset(self._w.items())))

    def __repr__(self):
        return f"WeightedGraph({len(self.vertices)} vertices, {len(self._w)} finite edges)"


def enumerate_cliques(graph: WeightedGraph) -> list:
    """All cliques of the finite-weight graph, including ``()``, each once.

    Cliques are grown in sorted vertex order, so each is produced exactly
    once, as a sorted tuple.
    """
    nbrs = {v: graph.neighbours(v) for v in graph.vertices}
    index = {v: i for i, v in enumerate(graph.vertices)}
    out = [()]

    def grow(clique, candidates):
        for k, v in enumerate(candidates):
            new = clique + (v,)
            out.append(new)
            grow(new, [u for u in candidates[k + 1:] if u in nbrs[v]])

    grow((), list(graph.vertices))
    out.sort(key=lambda s: (len(s), [index[v] for v in s]))
    return out


@dataclass(frozen=True)
class FlagComplex:
    """Clique complex of a :class:`WeightedGraph` with per-simplex Coxeter data.

    ``simplices`` is ordered by dimension and then lexicographically.
    """

    graph: WeightedGraph
    simplices: tuple
    types: Mapping = field(repr=False)
    orders: Mapping = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.simplices[-1]) - 1

    @property
    def vertices(self) -> tuple:
        return self.graph.vertices

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.orders

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.simplices)

    def __len__(self):
        return len(self.simplices)

    def of_dimension(self, d: int) -> list:
        return [s for s in self.simplices if len(s) == d + 1]

    def f_vector(self) -> list:
        """Number of simplices in dimensions -1, 0, ..., dim."""
        counts = [0] * (self.dimension + 2)
        for s in self.simplices:
            counts[len(s)] += 1
        return counts

    def order(self, simplex) -> int:
        """Order of the Coxeter group W_sigma."""
        return self.orders[tuple(simplex)]

    def type_of(self, simplex) -> TypeDecomposition:
        return self.types[tuple(simplex)]

    def __repr__(self):
        return f"FlagComplex(dim={self.dimension}, f={self.f_vector()})"


def build_flag_complex(graph: WeightedGraph) -> FlagComplex:
    """Enumerate all simplices and their Coxeter groups.

    Raises :class:`InfiniteCoxeterGroup` for the first simplex (in
    enumeration order) whose group is infinite.
    """
    simplices = enumerate_cliques(graph)
    types, orders = {}, {}
    for s in simplices:
        t = classify(graph.diagram(s))
        if t is INFINITE:
            raise InfiniteCoxeterGroup(s)
        types[s] = t
        orders[s] = t.order
    return FlagComplex(graph, tuple(simplices), types, orders)


def _normalise(S: FlagComplex, simplex) -> tuple:
    index = {v: i for i, v in enumerate(S.vertices)}
    try:
        s = tuple(sorted(simplex, key=index.__getitem__))
    except KeyError:
        raise SimplexNotInComplex(tuple(simplex)) from None
    if s not in S.orders:
        raise SimplexNotInComplex(s)
    return s


def link(S: FlagComplex, simplex) -> FlagComplex:
    """Link of ``simplex``: the full subcomplex on vertices adjacent to all of it."""
    s = _normalise(S, simplex)
    g = S.graph
    keep = {v for v in S.vertices if v not in s and all(g.weight(v, u) != INF for u in s)}
    sub = tuple(t for t in S.simplices if keep.issuperset(t))
    return FlagComplex(g.induced(keep), sub,
                       {t: S.types[t] for t in sub}, {t: S.orders[t] for t in sub})


def simplices_containing(S: FlagComplex, edge) -> list:
    """Every simplex that has both endpoints of ``edge`` (the closed star's top faces and all between)."""
    u, v = edge
    if u not in S.graph.vertices or v not in S.graph.vertices or S.graph.weight(u, v) == INF:
        raise NotAnEdge(f"{u}-{v} is not a finite-weight edge")
    return [s for s in S.simplices if u in s and v in s]


# -- text format ------------------------------------------------------------

def parse_complex(text: str) -> WeightedGraph:
    """Parse ``v <id>`` / ``e <id1> <id2> <m>`` records; ``#`` starts a comment."""
    vertices: list = []
    seen: set = set()
    weights: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "v":
            if len(parts) != 2:
                raise ParseError("expected 'v <id>'", lineno)
            if parts[1] in seen:
                raise ParseError(f"vertex {parts[1]!r} declared twice", lineno)
            seen.add(parts[1])
            vertices.append(parts[1])
        elif tag == "e":
            if len(parts) != 4:
                raise ParseError("expected 'e <id1> <id2> <m>'", lineno)
            _, a, b, m = parts
            for x in (a, b):
                if x not in seen:
                    raise UnknownVertex(f"vertex {x!r} used before declaration", lineno)
            if a == b:
                raise ParseError(f"loop at {a!r}", lineno)
            try:
                m = int(m)
            except ValueError:
                raise BadWeight(f"weight {m!r} is not an integer", lineno) from None
            if m < 2:
                raise BadWeight(f"weight {m} < 2", lineno)
            key = frozenset((a, b))
            if key in weights:
                raise DuplicateEdge(f"pair {a} {b} declared twice", lineno)
            weights[key] = m
        else:
            raise ParseError(f"unknown record {tag!r}", lineno)
    return WeightedGraph(vertices, weights)


def serialize_complex(graph: WeightedGraph) -> str:
    lines = [f"v {v}" for v in graph.vertices]
    lines += [f"e {u} {v} {m}" for (u, v), m in graph.weighted_edges()]
    return "\n".join(lines) + "\n"


def read_complex(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def write_complex(path, graph: WeightedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_complex(graph))
