"""Characters of SL(2): symmetric Laurent polynomials in ``q``.

Multiplicities of irreducibles in a tensor product are available by two
independent routes: reading coefficients off the product character, and the
Clebsch-Gordan recursion that fuses the last two factors.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence


class NotACharacterError(ValueError):
    """Raised when a Laurent polynomial is not the character of a representation."""


class SymLaurent:
    """Symmetric Laurent polynomial ``sum C_k q^k`` with integer coefficients.

    Only nonzero coefficients are stored.  Construction rejects input that
    is not palindromic (``C_k != C_{-k}`` for some ``k``).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        clean = {int(k): int(v) for k, v in coeffs.items() if v}
        for k, v in clean.items():
            if clean.get(-k, 0) != v:
                raise NotACharacterError(f"coefficients of q^{k} and q^{-k} differ")
        self._coeffs = dict(sorted(clean.items(), reverse=True))

    def __getitem__(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def items(self):
        return self._coeffs.items()

    def as_dict(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=0)

    def is_parity_pure(self) -> bool:
        return len({k % 2 for k in self._coeffs}) <= 1

    def __eq__(self, other):
        if isinstance(other, SymLaurent):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self._coeffs == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: SymLaurent) -> SymLaurent:
        out = defaultdict(int, self._coeffs)
        for k, v in other.items():
            out[k] += v
        return SymLaurent(out)

    def __mul__(self, other: SymLaurent) -> SymLaurent:
        out: dict[int, int] = defaultdict(int)
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other.items():
                out[k1 + k2] += v1 * v2
        return SymLaurent(out)

    def __rmul__(self, n: int) -> SymLaurent:
        return SymLaurent({k: n * v for k, v in self._coeffs.items()})

    def __repr__(self):
        return f"SymLaurent({self._coeffs})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k, v in self._coeffs.items():
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            terms.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(terms)


def irr_char(k: int) -> SymLaurent:
    """Character ``q^k + q^(k-2) + ... + q^-k`` of the irreducible ``rho_k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return SymLaurent({e: 1 for e in range(-k, k + 1, 2)})


def char_product(chars: Iterable[SymLaurent]) -> SymLaurent:
    chars = list(chars)
    if not chars:
        raise ValueError("char_product needs at least one character")
    out = chars[0]
    for c in chars[1:]:
        out = out * c
    return out


def decompose_char(c: SymLaurent | Mapping[int, int]) -> dict[int, int]:
    """Multiplicities ``{k: C_k - C_{k+2}}`` of ``rho_k`` in the character ``c``.

    Raises NotACharacterError for asymmetric, mixed-parity, or virtual
    (negative multiplicity) input.
    """
    if not isinstance(c, SymLaurent):
        c = SymLaurent(c)
    if not c.is_parity_pure():
        raise NotACharacterError("character mixes odd and even exponents")
    out = {}
    for k in range(c.degree, -1, -1):
        if (c.degree - k) % 2:
            continue
        n = c[k] - c[k + 2]
        if n < 0:
            raise NotACharacterError(f"negative multiplicity {n} for rho_{k}")
        if n:
            out[k] = n
    return out


def _check_degrees(d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d:
        raise ValueError("degree tuple must be non-empty")
    if any(x < 0 for x in d):
        raise ValueError("degrees must be nonnegative")
    return d


@lru_cache(maxsize=4096)
def _product_char(d: tuple[int, ...]) -> SymLaurent:
    return char_product(irr_char(x) for x in d)


def multiplicity(d: Sequence[int], k: int) -> int:
    """Multiplicity of ``rho_k`` in ``rho_d1 (x) ... (x) rho_dm`` from character coefficients."""
    d = _check_degrees(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if (sum(d) - k) % 2 or k > sum(d):
        return 0
    c = _product_char(d)
    return c[k] - c[k + 2]


@lru_cache(maxsize=None)
def _cg_recursion(d: tuple[int, ...], k: int) -> int:
    if len(d) == 1:
        return int(d[0] == k)
    a, b = d[-2], d[-1]
    head = d[:-2]
    return sum(_cg_recursion(head + (s,), k) for s in range(a + b, abs(a - b) - 1, -2))


def multiplicity_by_recursion(d: Sequence[int], k: int) -> int:
    """Same contract as :func:`multiplicity`, via Clebsch-Gordan on the last two factors."""
    d = _check_degrees(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if (sum(d) - k) % 2 or k > sum(d):
        return 0
    return _cg_recursion(d, k)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) - (comb(2 * n, n - 1) if n else 0)
