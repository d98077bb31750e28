"""Sparse exact tensors in ``S^d1 V (x) ... (x) S^dm V``.

A basis index is the tuple of y-exponents ``(e_1, ..., e_m)``; factor ``k``
is the monomial ``x^(d_k - e_k) y^e_k``.  Python tuple order is the
lexicographic basis order (x-heavy monomials first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, prod
from numbers import Rational
from typing import Iterator, Mapping, Sequence

from .kernels import orientation_sum
from .opgraph import GraphError, OuterplanarGraph

BasisIndex = tuple[int, ...]


@dataclass(frozen=True)
class TensorSpace:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def dimension(self) -> int:
        return prod(d + 1 for d in self.degrees)

    def basis(self) -> Iterator[BasisIndex]:
        """Basis indices in lexicographic order."""
        return product(*(range(d + 1) for d in self.degrees))

    def contains(self, e: BasisIndex) -> bool:
        return len(e) == len(self.degrees) and all(0 <= x <= d for x, d in zip(e, self.degrees))

    def position(self, e: BasisIndex) -> int:
        """Rank of ``e`` in the lexicographic basis order."""
        pos = 0
        for x, d in zip(e, self.degrees):
            pos = pos * (d + 1) + x
        return pos


def lex_compare(a: BasisIndex, b: BasisIndex, space: TensorSpace | None = None) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    if len(a) != len(b):
        raise ValueError("basis indices from different spaces")
    if space is not None and not (space.contains(a) and space.contains(b)):
        raise ValueError("basis index outside the space")
    return (a > b) - (a < b)


def _normalize(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


class SparseTensor:
    """Finite map from basis index to a nonzero rational."""

    __slots__ = ("space", "_entries")

    def __init__(self, space: TensorSpace | Sequence[int], entries: Mapping[BasisIndex, Rational] = (), check: bool = True):
        if not isinstance(space, TensorSpace):
            space = TensorSpace(tuple(space))
        self.space = space
        clean = {}
        for e, v in dict(entries).items():
            if v:
                e = tuple(e)
                if check and not space.contains(e):
                    raise ValueError(f"index {e} outside space {space.degrees}")
                clean[e] = _normalize(v)
        self._entries = clean

    @classmethod
    def _wrap(cls, space: TensorSpace, entries: dict) -> SparseTensor:
        # entries already validated, nonzero and normalized
        t = cls.__new__(cls)
        t.space = space
        t._entries = entries
        return t

    @classmethod
    def monomial(cls, space, e: BasisIndex, coeff: Rational = 1) -> SparseTensor:
        return cls(space, {tuple(e): coeff})

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.space.degrees

    def __getitem__(self, e: BasisIndex):
        return self._entries.get(tuple(e), 0)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def items(self) -> list[tuple[BasisIndex, Rational]]:
        """Entries sorted in basis order."""
        return sorted(self._entries.items())

    def keys(self):
        return self._entries.keys()

    def as_dict(self) -> dict[BasisIndex, Rational]:
        return dict(self._entries)

    def _check_same(self, other: SparseTensor):
        if self.space != other.space:
            raise ValueError(f"tensor spaces differ: {self.space.degrees} vs {other.space.degrees}")

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return self.space == other.space and self._entries == other._entries

    __hash__ = None

    def __add__(self, other: SparseTensor) -> SparseTensor:
        self._check_same(other)
        out = dict(self._entries)
        for e, v in other._entries.items():
            out[e] = out.get(e, 0) + v
        return SparseTensor(self.space, out, check=False)

    def __neg__(self) -> SparseTensor:
        return SparseTensor(self.space, {e: -v for e, v in self._entries.items()}, check=False)

    def __sub__(self, other: SparseTensor) -> SparseTensor:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SparseTensor):
            return componentwise_product(self, other)
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return SparseTensor(self.space, {e: other * v for e, v in self._entries.items()}, check=False)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"SparseTensor({self.space.degrees}, {dict(self.items())})"

    def __str__(self):
        if not self._entries:
            return "0"
        parts = []
        for e, v in self.items():
            mono = "⊗".join(format_monomial(d, x) for d, x in zip(self.degrees, e)) or "1"
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            parts.append(f"{sign}{mono}" if mag == 1 else f"{sign}{mag}·{mono}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "entries": [
                {"e": list(e), "num": str(Fraction(v).numerator), "den": str(Fraction(v).denominator)}
                for e, v in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> SparseTensor:
        space = TensorSpace(tuple(obj["degrees"]))
        entries = {tuple(it["e"]): Fraction(int(it["num"]), int(it["den"])) for it in obj["entries"]}
        return cls(space, entries)


def format_monomial(d: int, e: int) -> str:
    """``x^(d-e) y^e`` in compact form, e.g. ``x^2y`` for ``d=3, e=1``."""
    p = d - e

    def pw(s, k):
        return "" if k == 0 else (s if k == 1 else f"{s}^{k}")

    return (pw("x", p) + pw("y", e)) or "1"


def componentwise_product(s: SparseTensor, t: SparseTensor) -> SparseTensor:
    """Factorwise product of monomials, extended bilinearly."""
    if s.space.m != t.space.m:
        raise ValueError("tensors have different numbers of factors")
    space = TensorSpace(tuple(a + b for a, b in zip(s.degrees, t.degrees)))
    out: dict[BasisIndex, Rational] = {}
    for e1, v1 in s._entries.items():
        for e2, v2 in t._entries.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + v1 * v2
    return SparseTensor(space, out, check=False)


def leading_entry(t: SparseTensor) -> tuple[BasisIndex, Rational]:
    """Lexicographically smallest index with a nonzero coefficient."""
    if not t:
        raise ValueError("zero tensor has no leading entry")
    e = min(t.keys())
    return e, t[e]


def _orientation_buckets(G: OuterplanarGraph) -> dict[int, dict[BasisIndex, int]]:
    b = G.vertex_base
    arcs = [(i - b, j - b, a) for i, j, a in G.arcs]
    return orientation_sum(arcs, len(G.degrees), G.rooted)


def build_t_G(G: OuterplanarGraph) -> SparseTensor:
    """Signed sum of ``b_g`` over all orientations of an unrooted graph."""
    if G.rooted:
        raise GraphError("build_t_G expects an unrooted graph; use build_t_G_i")
    return SparseTensor(TensorSpace(G.degrees), _orientation_buckets(G).get(0, {}), check=False)


def build_t_G_i(G: OuterplanarGraph, i: int) -> SparseTensor:
    """Orientation sum restricted to root in-degree ``i`` (root factor dropped)."""
    if not G.rooted:
        raise GraphError("build_t_G_i expects a rooted graph")
    if not 0 <= i <= G.d0:
        raise ValueError(f"i={i} outside 0..{G.d0}")
    return SparseTensor(TensorSpace(G.factor_degrees), _orientation_buckets(G).get(i, {}), check=False)


def rooted_tensors(G: OuterplanarGraph) -> list[SparseTensor]:
    """``[t_{G,0}, ..., t_{G,d0}]`` from a single pass over the orientations."""
    if not G.rooted:
        raise GraphError("rooted_tensors expects a rooted graph")
    buckets = _orientation_buckets(G)
    space = TensorSpace(G.factor_degrees)
    return [SparseTensor(space, buckets.get(i, {}), check=False) for i in range(G.d0 + 1)]


def s_G_image(G: OuterplanarGraph, i: int) -> SparseTensor:
    """Image of ``x^i y^(d0-i)`` under the intertwiner onto the span of ``t_{G,*}``."""
    t = build_t_G_i(G, i)
    return Fraction((-1) ** i, comb(G.d0, i)) * t
