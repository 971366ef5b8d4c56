"""Text formats for graphs, facet families and sparse matrices.

edges-v1:  "n <vertex_count>" then one "i j" line per edge, 1-based,
           i < j, sorted lexicographically.
facets-v1: "n <vertex_count>" then one facet per line as space-separated
           1-based vertices; the empty facet is an empty line.
smat-v1:   "rows cols" then "r c value" triples, 1-based, row-major.
"""

from __future__ import annotations

from .complexes import Complex
from .fields import SparseRow
from .graphs import Graph


def write_edges_v1(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def read_edges_v1(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("edges-v1: missing 'n <count>' header")
    n = int(lines[0][2:])
    if n < 1:
        raise ValueError("edges-v1: vertex count must be positive")
    adj = [0] * n
    for ln in lines[1:]:
        if not ln.strip():
            continue
        a_s, b_s = ln.split()
        a, b = int(a_s), int(b_s)
        if not (1 <= a < b <= n):
            raise ValueError(f"edges-v1: bad edge line {ln!r}")
        adj[a - 1] |= 1 << (b - 1)
        adj[b - 1] |= 1 << (a - 1)
    return Graph(adj=tuple(adj), labels=tuple(range(1, n + 1)))


def write_facets_v1(c: Complex) -> str:
    lines = [f"n {c.vertex_count}"]
    for f in sorted(c.facets, key=lambda f: (len(f), sorted(f))):
        lines.append(" ".join(map(str, sorted(f))))
    return "\n".join(lines) + "\n"


def read_facets_v1(text: str) -> Complex:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n "):
        raise ValueError("facets-v1: missing 'n <count>' header")
    n = int(lines[0][2:])
    facets = []
    for ln in lines[1:]:
        facets.append(frozenset(int(x) for x in ln.split()))
    if not facets:
        raise ValueError("facets-v1: no facets")
    # constructor enforces the antichain invariant and vertex range
    return Complex(n, frozenset(facets))


def write_smat_v1(columns: list[SparseRow], rows: int) -> str:
    lines = [f"{rows} {len(columns)}"]
    for c, col in enumerate(columns):
        for r in sorted(col):
            lines.append(f"{r + 1} {c + 1} {col[r]}")
    return "\n".join(lines) + "\n"
