"""Brute-force certificates that never touch graphs or orientation sums.

Invariants are computed as the common kernel of E and F on the full
monomial basis; isotypic multiplicities come from weight-space dimensions.
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .kernels import y_degree_histogram
from .sl2act import LieGenerator, act_lie
from .tensorspace import SparseTensor, TensorSpace

DENSE_GUARD = 4096


class SizeGuardError(ValueError):
    """Requested space is larger than the configured guard."""


def lie_constraint_rows(space: TensorSpace) -> list[dict[int, int]]:
    """Rows of the stacked matrices of E and F on the monomial basis."""
    n = space.dimension
    rows: dict[int, dict[int, int]] = {}
    for col, e in enumerate(space.basis()):
        mono = SparseTensor.monomial(space, e)
        for shift, X in ((0, LieGenerator.E), (n, LieGenerator.F)):
            for idx, v in act_lie(X, mono).as_dict().items():
                rows.setdefault(shift + space.position(idx), {})[col] = v
    return [rows[k] for k in sorted(rows)]


def invariant_subspace_bruteforce(degrees: Sequence[int], guard: int = DENSE_GUARD) -> list[SparseTensor]:
    """Reduced-echelon basis of the tensors killed by both E and F."""
    space = TensorSpace(tuple(degrees))
    if space.dimension > guard:
        raise SizeGuardError(f"dimension {space.dimension} exceeds guard {guard}")
    basis = list(space.basis())
    vecs = linalg.kernel(lie_constraint_rows(space), space.dimension)
    return [SparseTensor(space, {basis[c]: v for c, v in vec.items()}, check=False) for vec in vecs]


def isotypic_dims_by_weights(degrees: Sequence[int]) -> dict[int, int]:
    """Multiplicity of ``rho_k`` as ``dim(weight k) - dim(weight k+2)``."""
    degrees = tuple(degrees)
    hist = y_degree_histogram(degrees)
    total = sum(degrees)

    def dim(w):
        # weight w = total - 2 * (y-degree)
        if (total - w) % 2 or abs(w) > total:
            return 0
        return hist[(total - w) // 2]

    out = {}
    for k in range(total, -1, -2):
        n = dim(k) - dim(k + 2)
        if n:
            out[k] = n
    return out


def tensor_rows(tensors: Sequence[SparseTensor]) -> list[dict[int, object]]:
    if not tensors:
        return []
    space = tensors[0].space
    rows = []
    for t in tensors:
        if t.space != space:
            raise ValueError("tensors live in different spaces")
        rows.append({space.position(e): v for e, v in t.as_dict().items()})
    return rows


def span_equals(a: Sequence[SparseTensor], b: Sequence[SparseTensor]) -> bool:
    """True iff the rational spans of ``a`` and ``b`` coincide."""
    if a and b and a[0].space != b[0].space:
        raise ValueError("tensors live in different spaces")
    ra, rb = tensor_rows(list(a)), tensor_rows(list(b))
    ea = linalg.Echelon(ra)
    if ea.rank != linalg.rank(rb):
        return False
    return all(ea.contains(r) for r in rb)
