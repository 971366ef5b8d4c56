"""Shared independent oracles for the test suite.

Everything here recomputes results by the most naive method available
(subset enumeration, dense Fraction elimination) so that the optimized
implementations in ``circm`` are checked against code that shares none
of their machinery.
"""

from fractions import Fraction
from itertools import combinations

from circm import Graph


def circular_distance(n: int, i: int, j: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def brute_independent_sets(g: Graph) -> set[frozenset[int]]:
    """Every independent set of g (by label), by checking all subsets."""
    labels = list(g.labels)
    out: set[frozenset[int]] = {frozenset()}
    for r in range(1, len(labels) + 1):
        for sub in combinations(labels, r):
            if all(not g.has_edge(a, b) for a, b in combinations(sub, 2)):
                out.add(frozenset(sub))
    return out


def brute_maximal_independent_sets(g: Graph) -> set[frozenset[int]]:
    ind = brute_independent_sets(g)
    return {s for s in ind if not any(s < t for t in ind)}


def dense_rank(rows: list[list[int]]) -> int:
    """Rank over Q by textbook Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def downward_closure(facets: set[frozenset[int]]) -> set[frozenset[int]]:
    out: set[frozenset[int]] = set()
    for f in facets:
        fl = sorted(f)
        for r in range(len(fl) + 1):
            out.update(frozenset(s) for s in combinations(fl, r))
    return out
