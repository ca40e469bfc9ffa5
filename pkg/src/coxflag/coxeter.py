"""Coxeter graphs, irreducible decomposition and finite-type recognition.

A :class:`CoxeterGraph` stores the Coxeter matrix entry ``m`` for every
unordered pair of distinct generators: ``2`` for commuting generators,
integers ``>= 3`` for diagram edges and :data:`INF` for free products.
Recognition follows the classification of finite irreducible Coxeter
groups (types A_n, B_n, D_n, E_6, E_7, E_8, F_4, H_3, H_4, I_2(m)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Optional, Union

INF = math.inf

Weight = Union[int, float]


class NotAnEdge(ValueError):
    """The requested vertex pair is not an edge (weight <= 2 or infinite where finite is needed)."""


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __bool__(self):
        return False


#: Marker returned by the classifiers for diagrams of infinite Coxeter groups.
INFINITE = _Infinite()


def _check_weight(m) -> Weight:
    if m == INF:
        return INF
    if isinstance(m, bool) or int(m) != m or m < 2:
        raise ValueError(f"Coxeter weight must be an integer >= 2 or INF, got {m!r}")
    return int(m)


class CoxeterGraph:
    """Symmetric Coxeter matrix on an ordered vertex list.

    ``weights`` maps vertex pairs to their ``m``; pairs left out get
    ``default`` (commuting generators unless told otherwise).
    """

    __slots__ = ("vertices", "_w")

    def __init__(self, vertices: Iterable[Hashable], weights: Optional[Mapping] = None,
                 default: Weight = 2):
        verts = tuple(sorted(set(vertices)))
        w = {}
        given = {}
        for pair, m in (weights or {}).items():
            u, v = tuple(pair)
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in verts or v not in verts:
                raise ValueError(f"pair {pair!r} uses an unknown vertex")
            given[frozenset((u, v))] = _check_weight(m)
        default = _check_weight(default)
        for u, v in combinations(verts, 2):
            key = frozenset((u, v))
            w[key] = given.get(key, default)
        self.vertices = verts
        self._w = w

    @classmethod
    def path(cls, labels: Iterable[Weight]) -> "CoxeterGraph":
        """Linear diagram 0 - 1 - ... with the given edge labels."""
        labels = list(labels)
        return cls(range(len(labels) + 1), {(i, i + 1): m for i, m in enumerate(labels)})

    def weight(self, u, v) -> Weight:
        return self._w[frozenset((u, v))]

    def pairs(self):
        """All unordered vertex pairs as sorted tuples with their weights."""
        for u, v in combinations(self.vertices, 2):
            yield (u, v), self._w[frozenset((u, v))]

    def edges(self) -> list:
        """Diagram edges: pairs with weight >= 3 (including INF)."""
        return [p for p, m in self.pairs() if m >= 3]

    def neighbours(self, u) -> list:
        return [v for v in self.vertices if v != u and self.weight(u, v) >= 3]

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def induced(self, subset: Iterable[Hashable]) -> "CoxeterGraph":
        sub = set(subset)
        return CoxeterGraph(sub, {p: m for p, m in self.pairs() if set(p) <= sub})

    def with_weight(self, u, v, m: Weight) -> "CoxeterGraph":
        w = dict(self.pairs())
        w[tuple(sorted((u, v)))] = m
        return CoxeterGraph(self.vertices, w)

    def key(self) -> tuple:
        """Label-free description: rank and the weights of all pairs in vertex order."""
        return (self.rank, tuple(m for _, m in self.pairs()))

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._w == other._w

    def __hash__(self):
        return hash((self.vertices, tuple(self._w[frozenset(p)] for p, _ in self.pairs())))

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}:{self.weight(u, v)}" for u, v in self.edges())
        return f"CoxeterGraph({list(self.vertices)}; {edges})"


_FAMILY_ORDER = "ABDEFHI"


@dataclass(frozen=True, order=True)
class CoxeterType:
    """A finite irreducible Coxeter type such as ``A3``, ``E8`` or ``I2(5)``."""

    family: str
    rank: int
    m: Optional[int] = field(default=None)

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "H": n in (3, 4),
            "I": n == 2 and self.m is not None and self.m >= 5,
        }.get(f, False)
        if not ok:
            raise ValueError(f"no finite Coxeter type {f}{n} (m={self.m})")
        if f != "I" and self.m is not None:
            raise ValueError("only I2 carries a label")

    @classmethod
    def parse(cls, name: str) -> "CoxeterType":
        """Inverse of :attr:`name`: ``"B4"``, ``"I2(7)"`` ..."""
        name = name.strip()
        if name.startswith("I2(") and name.endswith(")"):
            return cls("I", 2, int(name[3:-1]))
        return cls(name[0].upper(), int(name[1:]))

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name

    @property
    def order(self) -> int:
        """Cardinality of the group."""
        n = self.rank
        fac = math.factorial
        return {
            "A": lambda: fac(n + 1),
            "B": lambda: 2**n * fac(n),
            "D": lambda: 2 ** (n - 1) * fac(n),
            "E": lambda: {6: 2**7 * 3**4 * 5,
                          7: 2**10 * 3**4 * 5 * 7,
                          8: 2**14 * 3**5 * 5**2 * 7}[n],
            "F": lambda: 2**7 * 3**2,
            "H": lambda: {3: 120, 4: 14400}[n],
            "I": lambda: 2 * self.m,
        }[self.family]()

    def _sort_key(self):
        return (_FAMILY_ORDER.index(self.family), self.rank, self.m or 0)


@dataclass(frozen=True)
class TypeDecomposition:
    """Multiset of irreducible factors of a finite Coxeter group."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors",
                           tuple(sorted(self.factors, key=CoxeterType._sort_key)))

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    @property
    def name(self) -> str:
        return " x ".join(f.name for f in self.factors) if self.factors else "1"

    def __str__(self):
        return self.name


def group_order(d: TypeDecomposition) -> int:
    """Order of the direct product of the factors of ``d``."""
    return d.order


def all_types(max_rank: int, max_m: int = 12) -> list:
    """Every finite irreducible type of rank <= ``max_rank`` (I2(m) for 5 <= m <= ``max_m``)."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(CoxeterType("A", n))
        if n >= 2:
            out.append(CoxeterType("B", n))
        if n >= 4:
            out.append(CoxeterType("D", n))
        if n in (6, 7, 8):
            out.append(CoxeterType("E", n))
        if n == 4:
            out.append(CoxeterType("F", 4))
        if n in (3, 4):
            out.append(CoxeterType("H", n))
        if n == 2:
            out.extend(CoxeterType("I", 2, m) for m in range(5, max_m + 1))
    return out


def standard_diagram(t: CoxeterType) -> CoxeterGraph:
    """Diagram of ``t`` on vertices ``0 .. rank-1`` in a fixed layout.

    Layouts: A_n, B_n, F_4, H_n, I_2 are paths (B_n has its 4 on edge 0-1,
    F_4 on edge 1-2, H_n its 5 on edge 0-1); D_n has leaves 0 and 1 on the
    branch vertex 2 followed by the chain 2-3-...; E_n is the chain
    0-...-(n-2) with vertex n-1 hanging off vertex 2.
    """
    n = t.rank
    chain = {(i, i + 1): 3 for i in range(n - 1)}
    if t.family == "A":
        w = chain
    elif t.family == "B":
        w = {**chain, (0, 1): 4}
    elif t.family == "F":
        w = {**chain, (1, 2): 4}
    elif t.family == "H":
        w = {**chain, (0, 1): 5}
    elif t.family == "I":
        w = {(0, 1): t.m}
    elif t.family == "D":
        w = {(0, 2): 3, (1, 2): 3}
        w.update({(i, i + 1): 3 for i in range(2, n - 1)})
    else:  # E
        w = {(i, i + 1): 3 for i in range(n - 2)}
        w[(2, n - 1)] = 3
    return CoxeterGraph(range(n), w)


def decompose(g: CoxeterGraph) -> list:
    """Connected components of the diagram, ordered by their smallest vertex."""
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps = {}
    for v in g.vertices:
        comps.setdefault(find(v), []).append(v)
    return [g.induced(vs) for vs in sorted(comps.values(), key=min)]


def find_isomorphism(a: CoxeterGraph, b: CoxeterGraph) -> Optional[dict]:
    """Backtracking search for a label-preserving bijection ``a -> b``."""
    if a.rank != b.rank:
        return None
    if sorted(m for _, m in a.pairs()) != sorted(m for _, m in b.pairs()):
        return None
    # visit a's vertices in BFS order so every new vertex is constrained early
    order, seen = [], set()
    for root in a.vertices:
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in a.neighbours(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    deg_a = {v: sorted(a.weight(v, u) for u in a.neighbours(v)) for v in a.vertices}
    deg_b = {v: sorted(b.weight(v, u) for u in b.neighbours(v)) for v in b.vertices}
    mapping: dict = {}
    used: set = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for cand in b.vertices:
            if cand in used or deg_a[v] != deg_b[cand]:
                continue
            if all(a.weight(v, u) == b.weight(cand, mapping[u]) for u in order[:i]):
                mapping[v] = cand
                used.add(cand)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(cand)
        return False

    return dict(mapping) if extend(0) else None


def _candidates(n: int) -> list:
    out = [CoxeterType("A", n)]
    if n >= 3:
        out.append(CoxeterType("B", n))
    if n >= 4:
        out.append(CoxeterType("D", n))
    if n in (6, 7, 8):
        out.append(CoxeterType("E", n))
    if n == 4:
        out.append(CoxeterType("F", 4))
    if n in (3, 4):
        out.append(CoxeterType("H", n))
    return out


@lru_cache(maxsize=None)
def _classify_key(key: tuple):
    n, weights = key
    g = CoxeterGraph(range(n), dict(zip(combinations(range(n), 2), weights)))
    if n == 1:
        return CoxeterType("A", 1)
    if any(m == INF for m in weights):
        return INFINITE
    if len(g.edges()) != n - 1:  # connected with a cycle
        return INFINITE
    if n == 2:
        (m,) = weights
        return {3: CoxeterType("A", 2), 4: CoxeterType("B", 2)}.get(m) or CoxeterType("I", 2, m)
    labels = sorted(m for m in weights if m >= 3)
    degrees = sorted(len(g.neighbours(v)) for v in g.vertices)
    for t in _candidates(n):
        s = standard_diagram(t)
        if sorted(m for m in s.key()[1] if m >= 3) != labels:
            continue
        if sorted(len(s.neighbours(v)) for v in s.vertices) != degrees:
            continue
        if find_isomorphism(s, g) is not None:
            return t
    return INFINITE


def classify_component(g: CoxeterGraph):
    """Finite irreducible type of a connected diagram, or :data:`INFINITE`."""
    if g.rank == 0:
        raise ValueError("the empty diagram has no irreducible type")
    if len(decompose(g)) != 1:
        raise ValueError(f"diagram is not connected: {g!r}")
    return _classify_key(g.key())


@lru_cache(maxsize=None)
def _decomposition_for_key(key: tuple):
    n, weights = key
    g = CoxeterGraph(range(n), dict(zip(combinations(range(n), 2), weights)))
    factors = []
    for comp in decompose(g):
        t = _classify_key(comp.key())
        if t is INFINITE:
            return INFINITE
        factors.append(t)
    return TypeDecomposition(tuple(factors))


def classify(g: CoxeterGraph):
    """:class:`TypeDecomposition` of ``g``, or :data:`INFINITE` if any component is infinite."""
    return _decomposition_for_key(g.key())


@dataclass(frozen=True)
class EdgeContext:
    """Position of an edge inside an irreducible finite diagram.

    ``family`` is the diagram's family letter; ``prime`` marks the forked
    edge of D_n and the vertical edge of E_n. ``t`` counts edges: for A_n
    from the nearer end; for B_n, H_n from the labelled end; for D_n from
    the branched end (forked edges are edge 1); for E_n along the
    horizontal chain from the short arm; for F_4 from either end.
    """

    family: str
    n: int
    t: Optional[int] = None
    prime: bool = False
    m: Optional[int] = None
    canonicalized: bool = True

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I_2({self.m})"
        if self.prime:
            return f"{self.family}_{self.n}'"
        return f"{self.family}_{self.n}^{self.t}"

    def __str__(self):
        return self.name


def edge_context(g: CoxeterGraph, e) -> EdgeContext:
    """Locate edge ``e`` inside the connected finite diagram ``g``.

    Symmetric positions are reported canonically: A_n^t and A_n^{n-t}
    as the smaller ``t``, E_6^t as min(t, 5 - t), F_4^t as min(t, 4 - t),
    and every edge of D_4 as D_4'.
    """
    u, v = e
    if g.weight(u, v) < 3:
        raise NotAnEdge(f"{u}-{v} has weight {g.weight(u, v)}")
    t = classify_component(g)
    if t is INFINITE:
        raise ValueError("edge context is only defined for finite diagrams")
    mapping = find_isomorphism(standard_diagram(t), g)
    back = {b: a for a, b in mapping.items()}
    i, j = sorted((back[u], back[v]))
    n = t.rank
    fam = t.family
    if fam == "A":
        return EdgeContext("A", n, min(j, n - j))
    if fam in "BH":
        return EdgeContext(fam, n, j)
    if fam == "F":
        return EdgeContext("F", 4, min(j, 4 - j))
    if fam == "I":
        return EdgeContext("I", 2, 1, m=t.m)
    if fam == "D":
        if j == 2 or n == 4:
            return EdgeContext("D", n, prime=True)
        return EdgeContext("D", n, i)
    # E_n: vertical edge joins vertex 2 with vertex n - 1
    if (i, j) == (2, n - 1):
        return EdgeContext("E", n, prime=True)
    pos = j
    if n == 6:
        pos = min(pos, 5 - pos)
    return EdgeContext("E", n, pos)
