"""Integer simplicial homology and generalized-homology-sphere certification."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .complex import FlagComplex, link


class DimensionMismatch(ValueError):
    pass


def smith_normal_form(matrix) -> list:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Accepts any nested sequence (or 2-d array) of integers; the input is
    not modified.
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    r0 = 0
    while r0 < rows and r0 < cols:
        # pivot: smallest nonzero magnitude in the remaining block
        best = None
        for i in range(r0, rows):
            for j in range(r0, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[r0], a[pi] = a[pi], a[r0]
        for row in a:
            row[r0], row[pj] = row[pj], row[r0]
        while True:
            p = a[r0][r0]
            dirty = False
            for i in range(r0 + 1, rows):
                if a[i][r0]:
                    q = a[i][r0] // p
                    if q:
                        ri, rp = a[i], a[r0]
                        for j in range(r0, cols):
                            ri[j] -= q * rp[j]
                    if a[i][r0]:
                        dirty = True
            for j in range(r0 + 1, cols):
                if a[r0][j]:
                    q = a[r0][j] // p
                    if q:
                        for i in range(r0, rows):
                            a[i][j] -= q * a[i][r0]
                    if a[r0][j]:
                        dirty = True
            if not dirty:
                break
            # a remainder survived: move the smallest entry of row/column r0 to the pivot
            cands = [(abs(a[i][r0]), i, r0) for i in range(r0 + 1, rows) if a[i][r0]]
            cands += [(abs(a[r0][j]), r0, j) for j in range(r0 + 1, cols) if a[r0][j]]
            _, pi, pj = min(cands)
            if pj == r0:
                a[r0], a[pi] = a[pi], a[r0]
            else:
                for row in a:
                    row[r0], row[pj] = row[pj], row[r0]
        diag.append(abs(a[r0][r0]))
        r0 += 1
    # enforce the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """Z^rank plus the cyclic groups Z/t for t in ``torsion``."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of integers >= 2")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


TRIVIAL = AbelianGroupDescriptor()
INTEGERS = AbelianGroupDescriptor(1)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology in degrees -1 .. dim; higher degrees are trivial."""

    reduced: tuple

    def group(self, k: int) -> AbelianGroupDescriptor:
        i = k + 1
        if 0 <= i < len(self.reduced):
            return self.reduced[i]
        return TRIVIAL

    @property
    def top_degree(self) -> int:
        return len(self.reduced) - 2

    def betti(self, k: int) -> int:
        return self.group(k).rank

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic sum_k (-1)^k rank H_k."""
        reduced = sum((-1) ** k * self.betti(k) for k in range(-1, self.top_degree + 1))
        # reduced and unreduced characteristics differ by the augmentation term
        return reduced + 1

    def is_sphere(self, n: int) -> bool:
        """Same reduced homology as S^n (S^-1 is the empty complex)."""
        return self.mismatch_with_sphere(n) is None

    def mismatch_with_sphere(self, n: int) -> Optional[int]:
        """Lowest degree where this profile differs from S^n, or None."""
        for k in range(-1, max(n, self.top_degree) + 1):
            want = INTEGERS if k == n else TRIVIAL
            if self.group(k) != want:
                return k
        return None

    def __str__(self):
        return ", ".join(f"H~{k} = {self.group(k)}" for k in range(-1, self.top_degree + 1))


def sphere_profile(n: int) -> HomologyProfile:
    return HomologyProfile(tuple(INTEGERS if k == n else TRIVIAL for k in range(-1, n + 1)))


def boundary_matrix(S: FlagComplex, k: int) -> list:
    """Matrix of d_k: C_k -> C_{k-1}; d_0 is the augmentation onto C_{-1} = Z."""
    rows = S.of_dimension(k - 1)
    cols = S.of_dimension(k)
    index = {s: i for i, s in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            m[index[face]][j] = -1 if i % 2 else 1
    return m


def _rank_and_torsion(matrix) -> tuple:
    factors = smith_normal_form(matrix)
    return len(factors), tuple(f for f in factors if f > 1)


def homology(S: FlagComplex) -> HomologyProfile:
    """Reduced homology with integer coefficients in degrees -1 .. dim S."""
    top = S.dimension
    f = S.f_vector()  # f[k + 1] = number of k-simplices
    ranks = {}
    torsion = {}
    for k in range(0, top + 1):
        ranks[k], torsion[k] = _rank_and_torsion(boundary_matrix(S, k))
    groups = []
    for k in range(-1, top + 1):
        rank_out = ranks.get(k, 0)      # d_k leaving degree k
        rank_in = ranks.get(k + 1, 0)   # d_{k+1} entering degree k
        groups.append(AbelianGroupDescriptor(f[k + 1] - rank_out - rank_in,
                                             torsion.get(k + 1, ())))
    return HomologyProfile(tuple(groups))


@dataclass(frozen=True)
class GHSFailure:
    """First place where the sphere test broke.

    ``simplex`` is the simplex whose link failed (``()`` means the complex
    itself); ``degree`` is the lowest homological degree that disagrees with
    the expected sphere, or ``None`` when the simplex is too big for any
    sphere to be expected (``expected_dim < -1``).
    """

    simplex: tuple
    expected_dim: int
    degree: Optional[int]
    found: Optional[HomologyProfile]

    def __str__(self):
        where = "the complex" if not self.simplex else f"Lk({{{', '.join(map(str, self.simplex))}}})"
        if self.degree is None:
            return f"{where}: simplex too large, no sphere of dimension {self.expected_dim}"
        return (f"{where} should be a GHS^{self.expected_dim} but "
                f"H~{self.degree} = {self.found.group(self.degree)}")


@dataclass(frozen=True)
class GHSResult:
    ok: bool
    failure: Optional[GHSFailure] = None

    def __bool__(self):
        return self.ok


def _check_links(S: FlagComplex, n: int, include_empty: bool) -> GHSResult:
    # Lk of tau inside Lk(sigma) is Lk(sigma u tau), so the recursive sphere
    # condition flattens to: every link is a homology sphere of the right dimension.
    for s in S.simplices:
        if not s and not include_empty:
            continue
        expected = n - len(s)
        if expected < -1:
            return GHSResult(False, GHSFailure(s, expected, None, None))
        prof = homology(link(S, s) if s else S)
        bad = prof.mismatch_with_sphere(expected)
        if bad is not None:
            return GHSResult(False, GHSFailure(s, expected, bad, prof))
    return GHSResult(True)


def is_ghs(S: FlagComplex, n: int) -> GHSResult:
    """Is ``S`` a generalized homology n-sphere (checked on homology of all links)?

    The complex must have the reduced homology of S^n and every nonempty
    simplex sigma must have a link with the homology of S^(n - dim sigma - 1).
    On failure the result carries a :class:`GHSFailure` naming the first
    offending simplex (the complex itself first, then by dimension).
    """
    if n < -1:
        raise ValueError("n must be >= -1")
    return _check_links(S, n, include_empty=True)


def is_homology_manifold(S: FlagComplex, n: int) -> GHSResult:
    """Link criterion for homology n-manifolds; ``S`` must be n-dimensional."""
    if S.dimension != n:
        raise DimensionMismatch(f"complex has dimension {S.dimension}, expected {n}")
    return _check_links(S, n, include_empty=False)
