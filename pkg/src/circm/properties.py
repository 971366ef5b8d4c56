"""Deciders for Cohen-Macaulay, Buchsbaum, vertex-decomposable and
shellable complexes, plus projective dimension via induced-subcomplex
homology, assembled into a cross-checked report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .complexes import (
    Complex,
    FHVectors,
    _maximal,
    alpha as graph_alpha,
    faces,
    f_vector,
    independence_complex,
    link,
)
from .errors import GuardError, InconsistencyError
from .fields import FieldChoice
from .graphs import Graph
from .homology import reduced_betti

DEFAULT_SHELL_BUDGET = 10_000_000
PDIM_VERTEX_GUARD = 16

Witness = tuple[tuple[int, ...], int]


def _link_violation(c: Complex, face: frozenset[int], field: FieldChoice) -> Optional[int]:
    """Smallest i < dim link with nonvanishing H~_i of the link, if any."""
    lk = link(c, face)
    d = lk.dim()
    if d <= -1:
        return None
    betti = reduced_betti(lk, field)
    for i in range(-1, d):
        if betti[i] != 0:
            return i
    return None


def _sorted_faces(c: Complex) -> list[frozenset[int]]:
    return sorted(faces(c), key=lambda f: (len(f), sorted(f)))


def reisner_violation(c: Complex, field: FieldChoice) -> Optional[Witness]:
    """First face whose link has homology below its dimension.

    Returns (face, i) for the violation, or None when the complex is
    Cohen-Macaulay over the field.  The empty face is checked too, so a
    disconnected complex fails here already.
    """
    for face in _sorted_faces(c):
        i = _link_violation(c, face, field)
        if i is not None:
            return (tuple(sorted(face)), i)
    return None


def is_cohen_macaulay(c: Complex, field: FieldChoice) -> bool:
    return reisner_violation(c, field) is None


def buchsbaum_violation(c: Complex, field: FieldChoice) -> Optional[Witness]:
    """Like the Cohen-Macaulay test but skipping the empty face.

    Defined for pure complexes only; rejects impure input.
    """
    if not c.is_pure():
        raise ValueError("Buchsbaum is defined for pure complexes only")
    for face in _sorted_faces(c):
        if not face:
            continue
        i = _link_violation(c, face, field)
        if i is not None:
            return (tuple(sorted(face)), i)
    return None


def is_buchsbaum(c: Complex, field: FieldChoice) -> bool:
    return buchsbaum_violation(c, field) is None


# --- vertex decomposability -------------------------------------------------

_VD_CACHE: dict[frozenset[frozenset[int]], bool] = {}

FacetKey = frozenset


def _canonical_facets(facets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    """Relabel vertices by sorted occurrence: a cheap canonical form."""
    fs = list(facets)
    verts = sorted(set().union(*fs)) if any(fs) else []
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    return frozenset(frozenset(relabel[v] for v in f) for f in fs)


def _vd_recursive(facets: frozenset[frozenset[int]]) -> bool:
    key = facets
    cached = _VD_CACHE.get(key)
    if cached is not None:
        return cached
    result = _vd_compute(facets)
    _VD_CACHE[key] = result
    return result


def _vd_compute(facets: frozenset[frozenset[int]]) -> bool:
    if len({len(f) for f in facets}) != 1:
        return False
    if len(facets) == 1:
        return True
    verts = sorted(set().union(*facets))
    for x in verts:
        link_f = _maximal(f - {x} for f in facets if x in f)
        if not _vd_recursive(_canonical_facets(link_f)):
            continue
        del_f = _maximal(f - {x} for f in facets)
        if _vd_recursive(_canonical_facets(del_f)):
            return True
    return False


def is_vertex_decomposable(c: Complex) -> bool:
    """Pure-complex vertex decomposability.

    A simplex is vertex decomposable; otherwise some vertex must have a
    vertex-decomposable link and deletion.  Impure complexes are not
    vertex decomposable.  Results are memoized on a canonical relabeling
    of the facet family.
    """
    return _vd_recursive(_canonical_facets(c.facets))


# --- shellability ------------------------------------------------------------


@dataclass(frozen=True)
class ShellabilityResult:
    """Tri-state answer: True/False, or None when the budget ran out."""

    status: Optional[bool]
    order: Optional[tuple[frozenset[int], ...]] = None
    nodes: int = 0


def check_shelling_order(order: list[frozenset[int]]) -> bool:
    """Direct test of the shelling condition on a given facet order.

    For all j < i there must be an x in F_i \\ F_j and a k < i with
    F_i \\ F_k = {x}.
    """
    for i in range(1, len(order)):
        fi = order[i]
        singles = {next(iter(fi - order[k])) for k in range(i) if len(fi - order[k]) == 1}
        for j in range(i):
            if not (fi - order[j]) & singles:
                return False
    return True


def _components_of_facets(facets: list[frozenset[int]]) -> int:
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in facets:
        for v in f:
            parent.setdefault(v, v)
        it = iter(f)
        try:
            first = next(it)
        except StopIteration:
            continue
        for v in it:
            parent[find(v)] = find(first)
    roots = {find(v) for v in parent}
    return len(roots)


def is_shellable(c: Complex, node_budget: int = DEFAULT_SHELL_BUDGET, field: Optional[FieldChoice] = None) -> ShellabilityResult:
    """Decide shellability of a pure complex; impure input is not shellable.

    Dimension 0 is always shellable; in dimension 1 shellability is
    exactly connectivity.  In higher dimension a complex whose own
    reduced homology is nonzero below the top dimension cannot be
    shellable, which settles the answer without search; the remaining
    cases run a budgeted backtracking over facet orders (memoizing dead
    prefix sets) and return None when the budget is exhausted.  Positive
    answers are re-verified against the raw shelling condition.
    """
    if not c.is_pure():
        return ShellabilityResult(False)
    facets = sorted(c.facets, key=lambda f: sorted(f))
    if len(facets) == 1:
        return ShellabilityResult(True, tuple(facets))
    d = c.dim()
    if d == 0:
        order = tuple(facets)
        assert check_shelling_order(list(order))
        return ShellabilityResult(True, order)
    if d == 1:
        if _components_of_facets(facets) > 1:
            return ShellabilityResult(False)
        order = _greedy_connected_order(facets)
        assert check_shelling_order(order)
        return ShellabilityResult(True, tuple(order))
    fld = field if field is not None else FieldChoice.rational()
    betti = reduced_betti(c, fld)
    if any(betti[i] != 0 for i in range(-1, d)):
        # shellable complexes have homology only in the top dimension
        return ShellabilityResult(False)
    return _shelling_search(facets, node_budget)


def _greedy_connected_order(facets: list[frozenset[int]]) -> list[frozenset[int]]:
    order = [facets[0]]
    rest = facets[1:]
    covered = set(facets[0])
    while rest:
        for k, f in enumerate(rest):
            if f & covered:
                order.append(f)
                covered |= f
                del rest[k]
                break
        else:
            raise AssertionError("disconnected complex reached greedy ordering")
    return order


def _shelling_search(facets: list[frozenset[int]], node_budget: int) -> ShellabilityResult:
    t = len(facets)
    nodes = 0
    dead: set[frozenset[int]] = set()

    def attachable(fi: int, placed: list[int]) -> bool:
        f = facets[fi]
        xs = set()
        for x in f:
            sub = f - {x}
            if any(sub <= facets[p] for p in placed):
                xs.add(x)
        if not xs:
            return False
        return all(not xs <= facets[p] for p in placed)

    def search(placed: list[int], placed_key: frozenset[int]) -> Optional[bool]:
        nonlocal nodes
        if len(placed) == t:
            return True
        if placed_key in dead:
            return False
        nodes += 1
        if nodes > node_budget:
            return None
        for fi in range(t):
            if fi in placed_key:
                continue
            if placed and not attachable(fi, placed):
                continue
            placed.append(fi)
            res = search(placed, placed_key | {fi})
            if res is None or res is True:
                return res
            placed.pop()
        dead.add(placed_key)
        return False

    placed: list[int] = []
    res = search(placed, frozenset())
    if res is True:
        order = [facets[i] for i in placed]
        assert check_shelling_order(order)
        return ShellabilityResult(True, tuple(order), nodes)
    if res is False:
        return ShellabilityResult(False, None, nodes)
    return ShellabilityResult(None, None, nodes)


# --- projective dimension via induced-subcomplex homology --------------------


def projective_dimension(
    c: Complex,
    field: FieldChoice,
    max_vertices: int = PDIM_VERTEX_GUARD,
    override_guard: bool = False,
) -> int:
    """Projective dimension of the face ring, from induced subcomplexes.

    For every vertex subset W, a nonzero H~_j of the restriction to W
    contributes |W| - j - 1; the projective dimension is the maximum
    contribution.  Subsets are scanned largest-first so that subsets too
    small to beat the current maximum are skipped, and restrictions that
    are cones (a vertex common to all their facets) are skipped as
    acyclic.
    """
    n = c.vertex_count
    if n > max_vertices and not override_guard:
        raise GuardError(f"projective_dimension guarded at {max_vertices} vertices (n={n}); pass override to force")
    verts = list(range(1, n + 1))
    facet_masks = [sum(1 << (v - 1) for v in f) for f in c.facets]
    best = 0  # W = empty set: H~_{-1}({emptyset}) = 1 contributes 0
    from itertools import combinations as _comb

    for size in range(n, 0, -1):
        if size - 1 <= best:
            break
        for wt in _comb(verts, size):
            wmask = 0
            for v in wt:
                wmask |= 1 << (v - 1)
            restricted = {m & wmask for m in facet_masks}
            common = wmask
            for m in restricted:
                common &= m
            if common:
                continue  # cone over any common vertex: acyclic
            fsets = [frozenset(v + 1 for v in _bits(m)) for m in restricted]
            sub = Complex(n, _maximal(fsets))
            betti = reduced_betti(sub, field)
            for j in range(-1, sub.dim() + 1):
                if betti[j]:
                    best = max(best, size - j - 1)
    return best


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# --- assembled report ---------------------------------------------------------


@dataclass
class PropertyReport:
    graph_label: str
    vertex_count: int
    field: FieldChoice
    alpha: int
    krull_dim: int
    dim: int
    fh: FHVectors
    h_nonnegative: bool
    well_covered: bool
    pure: bool
    cm: bool
    cm_witness: Optional[Witness]
    buchsbaum: bool
    buchsbaum_witness: Optional[Witness]
    vertex_decomposable: bool
    shellable: Optional[bool]
    shelling_order: Optional[tuple[tuple[int, ...], ...]]
    pdim: Optional[int]
    depth: Optional[int]
    betti: Optional[dict[int, int]] = None

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_label,
            "n": self.vertex_count,
            "field": str(self.field),
            "alpha": self.alpha,
            "krull_dim": self.krull_dim,
            "dim": self.dim,
            "f": list(self.fh.f),
            "h": list(self.fh.h),
            "h_nonnegative": self.h_nonnegative,
            "well_covered": self.well_covered,
            "pure": self.pure,
            "cm": self.cm,
            "cm_witness": None if self.cm_witness is None else {"face": list(self.cm_witness[0]), "i": self.cm_witness[1]},
            "buchsbaum": self.buchsbaum,
            "vertex_decomposable": self.vertex_decomposable,
            "shellable": self.shellable,
            "shelling_order": None if self.shelling_order is None else [list(f) for f in self.shelling_order],
            "pdim": self.pdim,
            "depth": self.depth,
            "betti": None if self.betti is None else {str(k): v for k, v in sorted(self.betti.items())},
        }


def _assert_report_invariants(r: PropertyReport) -> None:
    checks = [
        (not r.vertex_decomposable or r.shellable is True, "vertex decomposable must imply shellable"),
        (r.shellable is not True or r.cm, "shellable must imply Cohen-Macaulay"),
        (not r.cm or r.buchsbaum, "Cohen-Macaulay must imply Buchsbaum"),
        (not r.cm or r.well_covered, "Cohen-Macaulay must imply well-covered"),
        (not r.cm or r.h_nonnegative, "Cohen-Macaulay must imply nonnegative h-vector"),
        (not r.buchsbaum or r.pure, "Buchsbaum must imply pure"),
        (r.krull_dim == r.alpha, "Krull dimension must equal the independence number"),
        (r.well_covered == r.pure, "well-covered must coincide with purity of the complex"),
    ]
    if r.pdim is not None:
        checks.append((r.cm == (r.vertex_count - r.pdim == r.krull_dim), "Reisner and projective-dimension routes disagree on Cohen-Macaulayness"))
        checks.append((r.depth == r.vertex_count - r.pdim, "depth must equal n - pdim"))
    for ok, msg in checks:
        if not ok:
            raise InconsistencyError(f"{r.graph_label}: {msg}")


def full_report(
    g: Graph,
    field: Optional[FieldChoice] = None,
    shell_budget: int = DEFAULT_SHELL_BUDGET,
    pdim_guard: int = PDIM_VERTEX_GUARD,
    override_pdim_guard: bool = False,
    include_betti: bool = False,
) -> PropertyReport:
    """Run every checker on Ind(g) and cross-validate the results."""
    fld = field if field is not None else FieldChoice.rational()
    ind = independence_complex(g)
    fh = f_vector(ind)
    a = graph_alpha(g)
    pure = ind.is_pure()
    cm_wit = reisner_violation(ind, fld)
    bb_wit: Optional[Witness]
    if pure:
        bb_wit = buchsbaum_violation(ind, fld)
        bb = bb_wit is None
    else:
        bb_wit, bb = None, False
    shell = is_shellable(ind, shell_budget, fld)
    pdim: Optional[int]
    try:
        pdim = projective_dimension(ind, fld, max_vertices=pdim_guard, override_guard=override_pdim_guard)
    except GuardError:
        pdim = None
    label = str(g.origin) if g.origin is not None else f"graph(n={g.vertex_count})"
    report = PropertyReport(
        graph_label=label,
        vertex_count=g.vertex_count,
        field=fld,
        alpha=a,
        krull_dim=a,
        dim=fh.dim,
        fh=fh,
        h_nonnegative=all(h >= 0 for h in fh.h),
        well_covered=pure,
        pure=pure,
        cm=cm_wit is None,
        cm_witness=cm_wit,
        buchsbaum=bb,
        buchsbaum_witness=bb_wit,
        vertex_decomposable=is_vertex_decomposable(ind),
        shellable=shell.status,
        shelling_order=None if shell.order is None else tuple(tuple(sorted(f)) for f in shell.order),
        pdim=pdim,
        depth=None if pdim is None else g.vertex_count - pdim,
        betti=reduced_betti(ind, fld).as_dict() if include_betti else None,
    )
    _assert_report_invariants(report)
    return report
