"""Simplicial complexes stored by their facet families.

A complex is a set of facets (inclusion-maximal faces) over an ambient
vertex range 1..vertex_count.  The complex whose only face is the empty
set is represented by the single facet frozenset() and has dimension -1.
Vertices of links/deletions/restrictions keep their original labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graphs import Graph


def _maximal(sets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    """Inclusion-maximal elements of a family of sets."""
    by_size = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset[int]] = []
    for s in by_size:
        if not any(s < t for t in out):
            out.append(s)
    return frozenset(out)


@dataclass(frozen=True)
class Complex:
    vertex_count: int
    facets: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if not self.facets:
            raise ValueError("facet family must be nonempty; use the single facet {} for the empty complex")
        for f in self.facets:
            for v in f:
                if not 1 <= v <= self.vertex_count:
                    raise ValueError(f"vertex {v} outside ambient range 1..{self.vertex_count}")
        fs = sorted(self.facets, key=len)
        for i, a in enumerate(fs):
            for b in fs[i + 1 :]:
                if a < b:
                    raise ValueError(f"facets are not an antichain: {set(a)} < {set(b)}")

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable[Iterable[int]], reduce: bool = False) -> "Complex":
        fams = [frozenset(f) for f in facets]
        if reduce:
            fams = list(_maximal(fams))
        return cls(vertex_count, frozenset(fams))

    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def covered_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def has_face(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return any(fs <= f for f in self.facets)


@lru_cache(maxsize=256)
def faces(c: Complex) -> frozenset[frozenset[int]]:
    """Every face of c, the empty face included."""
    out: set[frozenset[int]] = set()
    for f in c.facets:
        fl = sorted(f)
        for r in range(len(fl) + 1):
            out.update(frozenset(s) for s in combinations(fl, r))
    return frozenset(out)


@dataclass(frozen=True)
class FHVectors:
    """f-vector (f_{-1}, ..., f_D) and h-vector (h_0, ..., h_{D+1})."""

    dim: int
    f: tuple[int, ...]
    h: tuple[int, ...]


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """Binomial transform h_k = sum_i (-1)^(k-i) C(D+1-i, k-i) f_{i-1}."""
    dim = len(f) - 2
    h = []
    for k in range(dim + 2):
        h.append(sum((-1) ** (k - i) * math.comb(dim + 1 - i, k - i) * f[i] for i in range(k + 1)))
    return tuple(h)


def f_vector(c: Complex) -> FHVectors:
    """f/h-vectors by exact face enumeration."""
    dim = c.dim()
    f = [0] * (dim + 2)
    for face in faces(c):
        f[len(face)] += 1
    ft = tuple(f)
    return FHVectors(dim=dim, f=ft, h=h_from_f(ft))


def family_f_vector(n: int, d: int) -> FHVectors:
    """Closed-form f-vector of Ind(C_n(1..d)): f_{k-1} = n/(n-dk) * C(n-dk, k)."""
    if not (n >= 2 * d >= 2):
        raise ValueError(f"need n >= 2d >= 2, got n={n}, d={d}")
    dim = n // (d + 1) - 1
    f = []
    for k in range(dim + 2):
        num = n * math.comb(n - d * k, k)
        den = n - d * k
        if num % den != 0:
            raise ValueError(f"non-integral face count at n={n}, d={d}, k={k}")
        f.append(num // den)
    ft = tuple(f)
    return FHVectors(dim=dim, f=ft, h=h_from_f(ft))


def link(c: Complex, face: Iterable[int]) -> Complex:
    """The link of ``face``: all G disjoint from it with G ∪ face a face."""
    fs = frozenset(face)
    if not c.has_face(fs):
        raise ValueError(f"{sorted(fs)} is not a face of the complex")
    new = _maximal(f - fs for f in c.facets if fs <= f)
    return Complex(c.vertex_count, new)


def deletion(c: Complex, v: int) -> Complex:
    """All faces avoiding the vertex v."""
    if not 1 <= v <= c.vertex_count:
        raise ValueError(f"vertex {v} outside ambient range")
    new = _maximal(f - {v} for f in c.facets)
    return Complex(c.vertex_count, new)


def restrict(c: Complex, w: Iterable[int]) -> Complex:
    """All faces contained in the vertex set w."""
    ws = frozenset(w)
    for v in ws:
        if not 1 <= v <= c.vertex_count:
            raise ValueError(f"vertex {v} outside ambient range")
    new = _maximal(f & ws for f in c.facets)
    return Complex(c.vertex_count, new)


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets of g as bitmasks over internal indices.

    Bron-Kerbosch with pivoting on the complement graph.
    """
    n = g.vertex_count
    full = (1 << n) - 1
    comp = [(full ^ (1 << i) ^ g.adj[i]) for i in range(n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        # pivot: vertex of p|x with most complement-neighbours in p
        best, best_cnt = -1, -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            cnt = (comp[u] & p).bit_count()
            if cnt > best_cnt:
                best, best_cnt = u, cnt
            m ^= low
        cand = p & ~comp[best]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            bk(r | low, p & comp[v], x & comp[v])
            p &= ~low
            x |= low
            cand ^= low

    if n == 0:
        return [0]
    bk(0, full, 0)
    return out


def independence_complex(g: Graph) -> Complex:
    """The complex of independent vertex sets of g, by its facets."""
    n = g.vertex_count
    ambient = max(g.labels)
    masks = _maximal_independent_sets(g)
    facets = []
    for m in masks:
        facets.append(frozenset(g.labels[i] for i in range(n) if (m >> i) & 1))
    return Complex(ambient, frozenset(facets))


def alpha(g: Graph) -> int:
    """Independence number: the largest size of a maximal independent set."""
    return max(m.bit_count() for m in _maximal_independent_sets(g))


def is_well_covered(g: Graph) -> bool:
    """True iff every maximal independent set has the maximum cardinality."""
    sizes = {m.bit_count() for m in _maximal_independent_sets(g)}
    return len(sizes) == 1
