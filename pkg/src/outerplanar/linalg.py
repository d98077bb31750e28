"""Exact sparse linear algebra over the rationals.

Rows are dicts mapping column index to a rational (``int`` or
:class:`~fractions.Fraction`).  Elimination is fraction-free: every row is
scaled to a primitive integer vector and combined as ``a*r - b*p`` so that
no denominators appear until the final back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Row = Mapping[int, object]


def _as_int_row(row: Row) -> dict[int, int]:
    """Scale ``row`` by the lcm of its denominators; drop zeros."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for c, v in row.items():
        if v:
            w = v * den
            out[c] = int(w) if isinstance(w, int) else w.numerator
    return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _reduce(r: dict[int, int], p: dict[int, int], c: int) -> dict[int, int]:
    # r <- a*r - b*p, which cancels column c
    a, b = p[c], r[c]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {k: a * v for k, v in r.items()} if a != 1 else dict(r)
    for k, v in p.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incremental row echelon form keyed by pivot column.

    Rows are inserted one at a time and reduced against the existing pivots
    until they either vanish (dependent) or acquire a fresh leading column.
    """

    def __init__(self, rows: Iterable[Row] = ()):
        self.pivots: dict[int, dict[int, int]] = {}
        for row in rows:
            self.insert(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> dict[int, int]:
        """Return the residue of ``row`` (as a primitive integer row)."""
        r = _as_int_row(row)
        while r:
            c = min(r)
            p = self.pivots.get(c)
            if p is None:
                return _primitive(r)
            r = _reduce(r, p, c)
        return r

    def insert(self, row: Row) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def rref(self) -> list[dict[int, Fraction]]:
        """Reduced row echelon rows (pivot 1), sorted by pivot column."""
        cols = sorted(self.pivots)
        rows = {c: {k: Fraction(v, self.pivots[c][c]) for k, v in self.pivots[c].items()} for c in cols}
        for c in reversed(cols):
            pr = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r2 = rows[c2]
                f = r2.get(c)
                if f:
                    for k, v in pr.items():
                        w = r2.get(k, 0) - f * v
                        if w:
                            r2[k] = w
                        else:
                            del r2[k]
        return [rows[c] for c in cols]


def rank(rows: Iterable[Row]) -> int:
    return Echelon(rows).rank


def rref(rows: Iterable[Row]) -> list[dict[int, Fraction]]:
    return Echelon(rows).rref()


def kernel(rows: Iterable[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{v : row . v = 0 for every row}`` in reduced echelon form."""
    red = rref(rows)
    pivot_of = {min(r): r for r in red}
    basis = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        v = {f: Fraction(1)}
        for pc, r in pivot_of.items():
            x = r.get(f)
            if x:
                v[pc] = -x
        basis.append(v)
    return rref(basis)


def solve_left(rows: Sequence[Row], target: Row) -> list[Fraction] | None:
    """Find ``c`` with ``sum(c[k] * rows[k]) == target``, or None.

    The solution is unique when ``rows`` are independent; otherwise an
    arbitrary one is returned.
    """
    # Track combinations with tag columns placed after every data column.
    width = 1 + max((max(r) for r in rows if r), default=-1)
    width = max(width, 1 + max(target, default=-1))
    ech = Echelon()
    for k, r in enumerate(rows):
        aug = dict(r)
        aug[width + k] = 1
        ech.insert(aug)
    red = ech.rref()
    sol = [Fraction(0)] * len(rows)
    t = {c: Fraction(v) for c, v in target.items() if v}
    for r in red:
        pc = min(r)
        if pc >= width:
            break
        x = t.get(pc)
        if not x:
            continue
        for k, v in r.items():
            if k < width:
                w = t.get(k, 0) - x * v
                if w:
                    t[k] = w
                else:
                    t.pop(k, None)
            else:
                sol[k - width] += x * v
    if t:
        return None
    return sol


def dense_rows(rows: Sequence[Row], ncols: int) -> list[list]:
    return [[r.get(c, 0) for c in range(ncols)] for r in rows]
