"""SL(2) and sl(2) actions on tensor products of symmetric powers.

The group acts on each factor by ``x -> a x + c y``, ``y -> b x + d y``.
The Lie generators are the derivatives at the identity along
``[[1, t], [0, 1]]`` (E), ``[[1, 0], [t, 1]]`` (F) and ``diag(e^t, e^-t)`` (H):

    E: x^p y^r -> r x^(p+1) y^(r-1)
    F: x^p y^r -> p x^(p-1) y^(r+1)
    H: x^p y^r -> (p - r) x^p y^r

extended to tensors by the Leibniz rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

from .kernels import lie_apply
from .tensorspace import BasisIndex, SparseTensor, TensorSpace


@dataclass(frozen=True)
class GroupElement:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("matrix is not unimodular")

    @classmethod
    def identity(cls) -> GroupElement:
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, q: Rational) -> GroupElement:
        q = Fraction(q)
        return cls(q, 0, 0, 1 / q)

    @classmethod
    def upper(cls, t: Rational = 1) -> GroupElement:
        return cls(1, t, 0, 1)

    @classmethod
    def lower(cls, t: Rational = 1) -> GroupElement:
        return cls(1, 0, t, 1)


class LieGenerator(enum.Enum):
    E = "E"
    F = "F"
    H = "H"


def weight(e: BasisIndex, space: TensorSpace | tuple[int, ...]) -> int:
    """H-eigenvalue of the basis tensor ``e``: ``sum(d_k - 2 e_k)``."""
    degrees = space.degrees if isinstance(space, TensorSpace) else space
    return sum(d - 2 * x for d, x in zip(degrees, e))


@lru_cache(maxsize=4096)
def _factor_image(g: GroupElement, d: int, e: int) -> tuple[Fraction, ...]:
    # (a x + c y)^(d-e) (b x + d y)^e, as coefficients indexed by y-exponent
    p = d - e
    left = [comb(p, j) * g.a ** (p - j) * g.c ** j for j in range(p + 1)]
    right = [comb(e, j) * g.b ** (e - j) * g.d ** j for j in range(e + 1)]
    out = [Fraction(0)] * (d + 1)
    for j1, v1 in enumerate(left):
        if v1:
            for j2, v2 in enumerate(right):
                out[j1 + j2] += v1 * v2
    return tuple(out)


def act_group(g: GroupElement, t: SparseTensor) -> SparseTensor:
    degrees = t.degrees
    out: dict[BasisIndex, Fraction] = {}
    for e, v in t.as_dict().items():
        images = [_factor_image(g, d, x) for d, x in zip(degrees, e)]
        partial = [((), Fraction(v))]
        for img in images:
            partial = [(idx + (j,), c * w) for idx, c in partial for j, w in enumerate(img) if w]
        for idx, c in partial:
            out[idx] = out.get(idx, 0) + c
    return SparseTensor(t.space, out, check=False)


_OPS = {LieGenerator.E: 0, LieGenerator.F: 1, LieGenerator.H: 2}


def act_lie(X: LieGenerator | str, t: SparseTensor) -> SparseTensor:
    """Apply one of E, F, H to ``t`` (see the module docstring for the rules)."""
    op = _OPS[LieGenerator(X)]
    return SparseTensor._wrap(t.space, lie_apply(t.as_dict(), t.degrees, op))
