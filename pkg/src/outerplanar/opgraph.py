"""Noncrossing loopless multigraphs on a line of vertices.

A graph with vertices ``b, b+1, ..., b+m-1`` (``b`` is 1 for unrooted
graphs and 0 for rooted ones) is encoded by its in-degree vector under the
all-left-to-right orientation.  Writing ``r_v`` closing brackets followed by
``d_v - r_v`` opening brackets at each vertex gives a balanced word; matching
brackets nearest-first recovers the arcs.  Enumeration walks the in-degree
vectors in lexicographic order, so graphs come out sorted by their leading
basis tensor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, NamedTuple, Sequence

Arc = tuple[int, int, int]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class OuterplanarGraph:
    """A noncrossing loopless multigraph with fixed vertex positions.

    ``degrees[k]`` is the degree of vertex ``vertex_base + k``; arcs are
    ``(i, j, multiplicity)`` with ``i < j``, sorted.
    """

    vertex_base: int
    degrees: tuple[int, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.vertex_base not in (0, 1):
            raise GraphError("vertex_base must be 0 or 1")
        n = len(self.degrees)
        lo, hi = self.vertex_base, self.vertex_base + n - 1
        deg = [0] * n
        prev = None
        for i, j, a in self.arcs:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (lo <= i < j <= hi):
                raise GraphError(f"arc ({i}, {j}) out of range or not ordered")
            if a < 1:
                raise GraphError("arc multiplicity must be positive")
            if prev is not None and (i, j) <= prev:
                raise GraphError("arcs must be distinct and sorted")
            prev = (i, j)
            deg[i - lo] += a
            deg[j - lo] += a
        if tuple(deg) != self.degrees:
            raise GraphError(f"arc degrees {tuple(deg)} do not match {self.degrees}")
        for x, (i, j, _) in enumerate(self.arcs):
            for k, l, _ in self.arcs[x + 1:]:
                if i < k < j < l or k < i < l < j:
                    raise GraphError(f"arcs ({i}, {j}) and ({k}, {l}) cross")

    @classmethod
    def from_arcs(cls, arcs, degrees=None, rooted: bool = False, m: int | None = None) -> OuterplanarGraph:
        """Build a graph from ``(i, j[, mult])`` tuples, merging repeats.

        Without ``degrees``, the vertex count is ``m`` (non-root vertices) or
        the largest arc end.
        """
        base = 0 if rooted else 1
        cnt: Counter = Counter()
        for arc in arcs:
            i, j = sorted(arc[:2])
            cnt[(i, j)] += arc[2] if len(arc) > 2 else 1
        if degrees is None:
            top = max((j for _, j in cnt), default=base)
            if m is not None:
                top = max(top, m)
            n = top - base + 1
            deg = [0] * n
            for (i, j), a in cnt.items():
                deg[i - base] += a
                deg[j - base] += a
            degrees = deg
        arcs = tuple(sorted((i, j, a) for (i, j), a in cnt.items()))
        return cls(base, tuple(degrees), arcs)

    @property
    def rooted(self) -> bool:
        return self.vertex_base == 0

    @property
    def m(self) -> int:
        """Number of non-root vertices."""
        return len(self.degrees) - (1 if self.rooted else 0)

    @property
    def vertices(self) -> range:
        return range(self.vertex_base, self.vertex_base + len(self.degrees))

    @property
    def d0(self) -> int:
        if not self.rooted:
            raise GraphError("unrooted graph has no root degree")
        return self.degrees[0]

    def degree(self, v: int) -> int:
        return self.degrees[v - self.vertex_base]

    @property
    def factor_degrees(self) -> tuple[int, ...]:
        """Degrees of the tensor factors (the root contributes none)."""
        return self.degrees[1:] if self.rooted else self.degrees

    def skeleton_is_forest(self) -> bool:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for i, j, _ in self.arcs:
            ri, rj = find(i), find(j)
            if ri == rj:
                return False
            parent[ri] = rj
        return True

    def split(self) -> tuple[OuterplanarGraph, OuterplanarGraph]:
        """Split a rooted graph into its star at the root and the rest on ``1..m``."""
        star = [a for a in self.arcs if a[0] == 0]
        rest = [a for a in self.arcs if a[0] != 0]
        return (
            OuterplanarGraph.from_arcs(star, rooted=True, m=self.m),
            OuterplanarGraph.from_arcs(rest, rooted=False, m=self.m),
        )

    def __str__(self):
        body = ", ".join(f"{i}-{j}" + (f"^{a}" if a > 1 else "") for i, j, a in self.arcs)
        return f"{{{body}}}"


def _arcs_from_brackets(pairs: Sequence[tuple[int, int]], base: int) -> list[Arc]:
    # pairs[k] = (out, in) at vertex base + k
    stack: list[list[int]] = []  # runs of [vertex, open count]
    cnt: Counter = Counter()
    for k, (out, inn) in enumerate(pairs):
        v = base + k
        need = inn
        while need:
            if not stack:
                raise GraphError("unbalanced bracket word: too many closing brackets")
            run = stack[-1]
            take = min(need, run[1])
            cnt[(run[0], v)] += take
            run[1] -= take
            need -= take
            if not run[1]:
                stack.pop()
        if out:
            stack.append([v, out])
    if stack:
        raise GraphError("unbalanced bracket word: unclosed brackets")
    return sorted((i, j, a) for (i, j), a in cnt.items())


def graph_from_leading(pairs: Sequence[tuple[int, int]], rooted: bool = False) -> OuterplanarGraph:
    """Inverse of :func:`leading_basis_exponents`."""
    pairs = [(int(o), int(i)) for o, i in pairs]
    if any(o < 0 or i < 0 for o, i in pairs):
        raise GraphError("exponents must be nonnegative")
    if rooted and pairs and pairs[0][1]:
        raise GraphError("root vertex cannot have incoming arcs")
    base = 0 if rooted else 1
    arcs = _arcs_from_brackets(pairs, base)
    return OuterplanarGraph(base, tuple(o + i for o, i in pairs), tuple(arcs))


def leading_basis_exponents(G: OuterplanarGraph) -> list[tuple[int, int]]:
    """Per-vertex ``(out, in)`` degrees of the orientation with no inversions."""
    out = [0] * len(G.degrees)
    inn = [0] * len(G.degrees)
    b = G.vertex_base
    for i, j, a in G.arcs:
        out[i - b] += a
        inn[j - b] += a
    return list(zip(out, inn))


def _in_degree_vectors(degrees: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(degrees)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + degrees[k]
    r = [0] * n

    def walk(k: int, opened: int):
        if k == n:
            if opened == 0:
                yield tuple(r)
            return
        d = degrees[k]
        for x in range(0, min(d, opened) + 1):
            left = opened - x + d - x
            # every open bracket must be closed by a later vertex
            if left > suffix[k + 1]:
                continue
            r[k] = x
            yield from walk(k + 1, left)

    yield from walk(0, 0)


def enumerate_graphs(degrees: Sequence[int], rooted: bool = False) -> list[OuterplanarGraph]:
    """All noncrossing loopless multigraphs with the given degrees, sorted by leading tensor.

    With ``rooted`` the first degree belongs to vertex 0.
    """
    degrees = tuple(int(x) for x in degrees)
    if not degrees:
        raise ValueError("degree tuple must be non-empty")
    if any(x < 0 for x in degrees):
        raise ValueError("degrees must be nonnegative")
    if sum(degrees) % 2:
        return []
    base = 0 if rooted else 1
    graphs = []
    for r in _in_degree_vectors(degrees):
        pairs = [(d - x, x) for d, x in zip(degrees, r)]
        graphs.append(OuterplanarGraph(base, degrees, tuple(_arcs_from_brackets(pairs, base))))
    return graphs


@lru_cache(maxsize=None)
def _count(d: tuple[int, ...]) -> int:
    if len(d) == 1:
        return int(d[0] == 0)
    a, b = d[-2], d[-1]
    head = d[:-2]
    return sum(_count(head + (s,)) for s in range(a + b, abs(a - b) - 1, -2))


def count_graphs(degrees: Sequence[int], rooted: bool = False) -> int:
    """Number of graphs with the given degrees, by contracting the last two vertices.

    Rooting only relabels vertices, so the flag does not change the count.
    """
    degrees = tuple(int(x) for x in degrees)
    if not degrees:
        raise ValueError("degree tuple must be non-empty")
    if any(x < 0 for x in degrees):
        raise ValueError("degrees must be nonnegative")
    return _count(degrees)


@dataclass(frozen=True)
class Orientation:
    """Orientation of every edge copy, up to permuting parallel copies.

    ``flips[c]`` counts copies of arc class ``c`` directed right to left.
    """

    graph: OuterplanarGraph
    flips: tuple[int, ...]

    def __post_init__(self):
        if len(self.flips) != len(self.graph.arcs):
            raise GraphError("one flip count per arc class required")
        for u, (_, _, a) in zip(self.flips, self.graph.arcs):
            if not 0 <= u <= a:
                raise GraphError("flip count out of range")

    @property
    def inv(self) -> int:
        return sum(self.flips)

    def vertex_degrees(self) -> list[tuple[int, int]]:
        """Per-vertex ``(out, in)`` degrees."""
        return _vertex_degrees(self.graph, self.flips)

    def root_in_degree(self) -> int:
        return sum(u for u, (i, _, _) in zip(self.flips, self.graph.arcs) if i == 0)


def _vertex_degrees(G: OuterplanarGraph, flips) -> list[tuple[int, int]]:
    b = G.vertex_base
    out = [0] * len(G.degrees)
    inn = [0] * len(G.degrees)
    for u, (i, j, a) in zip(flips, G.arcs):
        out[i - b] += a - u
        inn[i - b] += u
        inn[j - b] += a - u
        out[j - b] += u
    return list(zip(out, inn))


def canonical_orientation(G: OuterplanarGraph) -> Orientation:
    return Orientation(G, (0,) * len(G.arcs))


class OrientationTerm(NamedTuple):
    orientation: Orientation
    sign: int
    multiplicity: int
    vertex_degrees: list[tuple[int, int]]


def _bounded_compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not bounds:
        if total == 0:
            yield ()
        return
    rest = sum(bounds[1:])
    for u in range(max(0, total - rest), min(bounds[0], total) + 1):
        for tail in _bounded_compositions(total - u, bounds[1:]):
            yield (u,) + tail


def flip_vectors(G: OuterplanarGraph, root_in_degree: int | None = None) -> Iterator[tuple[int, ...]]:
    """Flip vectors of ``G``; optionally only those with the given root in-degree."""
    mults = [a for _, _, a in G.arcs]
    if root_in_degree is None:
        yield from product(*(range(a + 1) for a in mults))
        return
    if not G.rooted:
        raise GraphError("root_in_degree applies to rooted graphs only")
    root = [k for k, (i, _, _) in enumerate(G.arcs) if i == 0]
    other = [k for k, (i, _, _) in enumerate(G.arcs) if i != 0]
    if not 0 <= root_in_degree <= G.d0:
        return
    flips = [0] * len(mults)
    for head in _bounded_compositions(root_in_degree, [mults[k] for k in root]):
        for k, u in zip(root, head):
            flips[k] = u
        for tail in product(*(range(mults[k] + 1) for k in other)):
            for k, u in zip(other, tail):
                flips[k] = u
            yield tuple(flips)


def orientations(G: OuterplanarGraph, root_in_degree: int | None = None) -> Iterator[OrientationTerm]:
    """Orientations of ``G`` grouped by flip vector.

    Each term carries the sign ``(-1)^inv``, the number of edge-copy
    orientations sharing the flip vector, and per-vertex ``(out, in)``.
    """
    mults = [a for _, _, a in G.arcs]
    for flips in flip_vectors(G, root_in_degree):
        mult = 1
        for u, a in zip(flips, mults):
            mult *= comb(a, u)
        sign = -1 if sum(flips) % 2 else 1
        yield OrientationTerm(Orientation(G, flips), sign, mult, _vertex_degrees(G, flips))
