"""Exact coefficient fields and sparse rank computation.

Two field kinds are supported: arbitrary-precision rationals and prime
fields GF(p).  Rational elimination works on integer rows (fraction-free
cross-multiplication with gcd reduction), so no rounding ever occurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

DEFAULT_PRIME = 32003
_PRIME_CAP = 1 << 61


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for n < 3.3e24.
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: exact rationals or GF(p)."""

    kind: str  # "rational" | "gf"
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no prime")
        elif self.kind == "gf":
            if self.p is None or not 2 <= self.p < _PRIME_CAP or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2^61, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rational() -> "FieldChoice":
        return FieldChoice("rational")

    @staticmethod
    def gf(p: int = DEFAULT_PRIME) -> "FieldChoice":
        return FieldChoice("gf", p)

    @staticmethod
    def parse(text: str) -> "FieldChoice":
        """Parse 'q' or 'gf:P'."""
        if text == "q":
            return FieldChoice.rational()
        if text == "gf":
            return FieldChoice.gf()
        if text.startswith("gf:"):
            return FieldChoice.gf(int(text[3:]))
        raise ValueError(f"cannot parse field {text!r}; expected 'q' or 'gf:P'")

    def __str__(self) -> str:
        return "q" if self.kind == "rational" else f"gf:{self.p}"


SparseRow = dict[int, int]


def _row_gcd_reduce(row: SparseRow) -> SparseRow:
    g = reduce(math.gcd, row.values())
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _rank_int(rows: list[SparseRow]) -> int:
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        i = min(range(len(rows)), key=lambda k: len(rows[k]))
        piv = _row_gcd_reduce(rows.pop(i))
        rank += 1
        pc = min(piv, key=lambda c: (abs(piv[c]), c))
        pv = piv[pc]
        nxt = []
        for r in rows:
            rv = r.get(pc)
            if rv is None:
                nxt.append(r)
                continue
            out = {c: v * pv for c, v in r.items()}
            for c, v in piv.items():
                nv = out.get(c, 0) - v * rv
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            if out:
                nxt.append(_row_gcd_reduce(out))
        rows = nxt
    return rank


def _rank_mod(rows: list[SparseRow], p: int) -> int:
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        i = min(range(len(rows)), key=lambda k: len(rows[k]))
        piv = rows.pop(i)
        rank += 1
        pc = min(piv)
        inv = pow(piv[pc], p - 2, p)
        piv = {c: v * inv % p for c, v in piv.items()}
        nxt = []
        for r in rows:
            rv = r.get(pc)
            if rv is None:
                nxt.append(r)
                continue
            out = dict(r)
            for c, v in piv.items():
                nv = (out.get(c, 0) - v * rv) % p
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            if out:
                nxt.append(out)
        rows = nxt
    return rank


def rank_of_rows(rows: list[SparseRow], field: FieldChoice) -> int:
    """Exact rank of a sparse integer matrix given as rows {col: value}."""
    if field.kind == "rational":
        return _rank_int(rows)
    return _rank_mod(rows, field.p)


def rows_from_vectors(vectors: Sequence[Sequence]) -> list[SparseRow]:
    """Sparse integer rows from dense vectors of ints/Fractions.

    Each rational row is scaled by its common denominator, which leaves
    the rank unchanged.  Over GF(p) the denominators must not be
    divisible by p.
    """
    if not vectors:
        return []
    length = len(vectors[0])
    rows = []
    for vec in vectors:
        if len(vec) != length:
            raise ValueError("vectors must share a common length")
        scale = 1
        for x in vec:
            if isinstance(x, Fraction):
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        row: SparseRow = {}
        for c, x in enumerate(vec):
            v = int(x * scale)
            if v:
                row[c] = v
        rows.append(row)
    return rows
