"""Pure-Python kernels; the compiled ``_ckernels`` mirrors this API."""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Mapping, Sequence

BACKEND = "python"


def orientation_sum(
    arcs: Sequence[tuple[int, int, int]],
    nvert: int,
    skip_root: bool,
) -> dict[int, dict[tuple[int, ...], int]]:
    """Signed, binomially weighted orientation sum of a graph.

    ``arcs`` are ``(i, j, a)`` with 0-based vertex positions.  Returns
    ``{root_in_degree: {index: coeff}}`` where ``index`` lists the in-degree
    of every vertex (vertex 0 dropped when ``skip_root``).  When the graph is
    unrooted every term lands in bucket 0.
    """
    start = 1 if skip_root else 0
    binoms = [[comb(a, u) for u in range(a + 1)] for _, _, a in arcs]
    root = [k for k, (i, _, _) in enumerate(arcs) if skip_root and i == 0]
    buckets: dict[int, dict[tuple[int, ...], int]] = {}
    for flips in product(*(range(a + 1) for _, _, a in arcs)):
        inn = [0] * nvert
        coeff = 1
        par = 0
        for (i, j, a), u, bn in zip(arcs, flips, binoms):
            inn[i] += u
            inn[j] += a - u
            coeff *= bn[u]
            par += u
        if par & 1:
            coeff = -coeff
        key = 0
        for k in root:
            key += flips[k]
        bucket = buckets.setdefault(key, {})
        e = tuple(inn[start:])
        bucket[e] = bucket.get(e, 0) + coeff
    for key in list(buckets):
        buckets[key] = {e: v for e, v in buckets[key].items() if v}
    return buckets


def y_degree_histogram(degrees: Sequence[int]) -> list[int]:
    """Count basis monomials by total y-exponent, walking every basis index.

    ``out[j]`` is the number of indices ``e`` with ``sum(e) == j``.
    """
    degrees = list(degrees)
    m = len(degrees)
    out = [0] * (sum(degrees) + 1)
    e = [0] * m
    s = 0
    while True:
        out[s] += 1
        k = m - 1
        while k >= 0 and e[k] == degrees[k]:
            s -= e[k]
            e[k] = 0
            k -= 1
        if k < 0:
            return out
        e[k] += 1
        s += 1


def rank_mod_p(rows: Sequence[Mapping[int, int]], ncols: int, p: int) -> int:
    """Rank modulo the prime ``p`` of integer rows given as ``{column: value}``."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                w = (r.get(k, 0) - f * v) % p
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return len(pivots)


def lie_apply(entries: Mapping[tuple[int, ...], object], degrees: Sequence[int], op: int) -> dict:
    """Apply E (``op=0``), F (``op=1``) or H (``op=2``) to a tensor given as ``{index: coeff}``.

    Zero results are dropped.
    """
    out: dict = {}
    if op == 2:
        total = sum(degrees)
        for e, v in entries.items():
            w = total - 2 * sum(e)
            if w:
                out[e] = w * v
        return out
    raising = op == 0
    for e, v in entries.items():
        for k, d in enumerate(degrees):
            x = e[k]
            n = x if raising else d - x
            if not n:
                continue
            idx = e[:k] + ((x - 1) if raising else (x + 1),) + e[k + 1:]
            out[idx] = out.get(idx, 0) + n * v
    return {e: v for e, v in out.items() if v}
