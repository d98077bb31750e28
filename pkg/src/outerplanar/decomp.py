"""Decomposition of ``rho_d1 (x) ... (x) rho_dm`` into the spans ``T_G``.

For each root degree ``d0`` the rooted graphs of degrees ``(d0, d1, ..., dm)``
label the copies of ``rho_d0``; graph ``G`` contributes the tensors
``t_{G,0}, ..., t_{G,d0}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm, prod
from typing import Sequence

from . import linalg
from .kernels import rank_mod_p
from .opgraph import OuterplanarGraph, enumerate_graphs
from .oracle import DENSE_GUARD, SizeGuardError, tensor_rows
from .sl2act import LieGenerator, act_lie
from .tensorspace import SparseTensor, TensorSpace, rooted_tensors

MAX_DIMENSION = 10**6
# Mersenne prime; a nonzero determinant mod p certifies one over the integers.
CERT_PRIME = 2**31 - 1


@dataclass
class GraphBasis:
    graph: OuterplanarGraph
    tensors: list[SparseTensor]


@dataclass
class Component:
    d0: int
    graphs: list[GraphBasis]

    @property
    def multiplicity(self) -> int:
        return len(self.graphs)


@dataclass
class DecompositionReport:
    degrees: tuple[int, ...]
    components: list[Component]
    verification: dict[str, bool | None] = field(default_factory=dict)

    @property
    def space(self) -> TensorSpace:
        return TensorSpace(self.degrees)

    @property
    def dimension(self) -> int:
        return self.space.dimension

    @property
    def basis_count(self) -> int:
        return sum(c.multiplicity * (c.d0 + 1) for c in self.components)

    @property
    def dimension_check(self) -> tuple[int, int]:
        return self.basis_count, self.dimension

    @property
    def verified(self) -> bool:
        return all(v is True for v in self.verification.values())

    def rows(self) -> list[tuple[int, OuterplanarGraph, int, SparseTensor]]:
        """``(d0, G, i, t_{G,i})`` in matrix row order."""
        return [
            (c.d0, gb.graph, i, t)
            for c in self.components
            for gb in c.graphs
            for i, t in enumerate(gb.tensors)
        ]

    def summary(self) -> str:
        parts = []
        for c in self.components:
            mult = "" if c.multiplicity == 1 else f"{c.multiplicity}·"
            parts.append(f"{mult}ρ{c.d0}")
        basis, dim = self.dimension_check
        return f"{' ⊕ '.join(parts)}, dim {basis} = {dim}"


def _check_degrees(degrees: Sequence[int]) -> tuple[int, ...]:
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise ValueError("degree tuple must be non-empty")
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    return degrees


def decompose(
    degrees: Sequence[int],
    verify: bool = True,
    max_dimension: int = MAX_DIMENSION,
    dense_guard: int = DENSE_GUARD,
) -> DecompositionReport:
    """Build every ``t_{G,i}`` for the tensor product of the given degrees.

    Components are ordered by descending ``d0``.  With ``verify`` the report
    carries rank, invariance and intertwining flags; verification of spaces
    above ``dense_guard`` raises :class:`SizeGuardError`.
    """
    degrees = _check_degrees(degrees)
    dim = prod(d + 1 for d in degrees)
    if dim > max_dimension:
        raise SizeGuardError(f"dimension {dim} exceeds guard {max_dimension}")
    if verify and dim > dense_guard:
        raise SizeGuardError(f"dimension {dim} exceeds verification guard {dense_guard}")
    total = sum(degrees)
    components = []
    for d0 in range(total, -1, -2):
        graphs = enumerate_graphs((d0,) + degrees, rooted=True)
        if graphs:
            components.append(Component(d0, [GraphBasis(G, rooted_tensors(G)) for G in graphs]))
    report = DecompositionReport(degrees, components)
    if verify:
        report.verification = {
            "rank": check_rank(report),
            "invariance": check_invariance(report),
            "intertwining": check_intertwining(report),
        }
    return report


def full_basis_matrix(report: DecompositionReport) -> list[list]:
    """Rows ``t_{G,i}`` (report order) against the lexicographic monomial basis."""
    rows = tensor_rows([t for *_, t in report.rows()])
    return linalg.dense_rows(rows, report.dimension)


def certify_full_rank(rows: Sequence[dict[int, int]], n: int) -> bool:
    """Exact test that ``n`` integer rows in ``n`` columns are independent.

    A full rank modulo a prime proves full rank over the rationals; only if
    that fails does the exact fraction-free elimination run.
    """
    if len(rows) != n:
        return False
    if rank_mod_p(rows, n, CERT_PRIME) == n:
        return True
    return linalg.rank(rows) == n


def check_rank(report: DecompositionReport) -> bool:
    basis, dim = report.dimension_check
    if basis != dim:
        return False
    rows = tensor_rows([t for *_, t in report.rows()])
    return certify_full_rank(rows, dim)


def check_invariance(report: DecompositionReport) -> bool:
    """E kills each top tensor ``t_{G,d0}`` and F each bottom tensor ``t_{G,0}``.

    For ``d0 = 0`` this is invariance of ``t_G`` itself.
    """
    for c in report.components:
        for gb in c.graphs:
            if act_lie(LieGenerator.E, gb.tensors[-1]) or act_lie(LieGenerator.F, gb.tensors[0]):
                return False
    return True


def s_G_images(gb: GraphBasis) -> list[SparseTensor]:
    d0 = len(gb.tensors) - 1
    return [Fraction((-1) ** i, comb(d0, i)) * t for i, t in enumerate(gb.tensors)]


def _scaled_images(gb: GraphBasis) -> list[SparseTensor]:
    # s_G images times lcm of the binomials: same identity, integer entries
    d0 = len(gb.tensors) - 1
    scale = lcm(*(comb(d0, i) for i in range(d0 + 1)))
    return [((-1) ** i * (scale // comb(d0, i))) * t for i, t in enumerate(gb.tensors)]


def intertwining_holds(gb: GraphBasis, X: LieGenerator, i: int, images: list[SparseTensor] | None = None) -> bool:
    """``X . s_G(x^i y^(d0-i)) == s_G(X . x^i y^(d0-i))``.

    ``images`` may be any common nonzero multiple of the s_G images.
    """
    d0 = len(gb.tensors) - 1
    if images is None:
        images = _scaled_images(gb)
    lhs = act_lie(X, images[i])
    src = act_lie(X, SparseTensor.monomial((d0,), (d0 - i,)))
    rhs: dict = {}
    for (e0,), v in src.as_dict().items():
        for e, w in images[d0 - e0].as_dict().items():
            rhs[e] = rhs.get(e, 0) + v * w
    return lhs == SparseTensor(lhs.space, rhs, check=False)


def check_intertwining(report: DecompositionReport) -> bool:
    for c in report.components:
        for gb in c.graphs:
            images = _scaled_images(gb)
            for i in range(c.d0 + 1):
                for X in LieGenerator:
                    if not intertwining_holds(gb, X, i, images):
                        return False
    return True


def check_weights(report: DecompositionReport) -> bool:
    """Every ``t_{G,i}`` is an H-eigenvector with eigenvalue ``2i - d0``."""
    for d0, _, i, t in report.rows():
        if act_lie(LieGenerator.H, t) != (2 * i - d0) * t:
            return False
    return True


def project(report: DecompositionReport, t: SparseTensor) -> list[Fraction]:
    """Coordinates of ``t`` in the basis of all ``t_{G,i}`` (row order of the report)."""
    if t.space != report.space:
        raise ValueError(f"tensor space {t.degrees} does not match {report.degrees}")
    rows = tensor_rows([u for *_, u in report.rows()])
    target = {report.space.position(e): v for e, v in t.as_dict().items()}
    sol = linalg.solve_left(rows, target)
    if sol is None:
        raise ValueError("tensor is not in the span of the basis")
    return sol


def combine(report: DecompositionReport, coords: Sequence) -> SparseTensor:
    """Inverse of :func:`project`."""
    out = SparseTensor(report.space)
    for c, (*_, t) in zip(coords, report.rows()):
        if c:
            out = out + c * t
    return out


def report_to_json(report: DecompositionReport) -> dict:
    return {
        "degrees": list(report.degrees),
        "components": [
            {
                "d0": c.d0,
                "graphs": [
                    {
                        "arcs": [list(a) for a in gb.graph.arcs],
                        "tensors": [t.to_json() for t in gb.tensors],
                    }
                    for gb in c.graphs
                ],
            }
            for c in report.components
        ],
        "dimension": report.dimension,
        "verified": {k: report.verification.get(k) for k in ("rank", "invariance", "intertwining")},
    }


def report_from_json(obj: dict) -> DecompositionReport:
    degrees = tuple(obj["degrees"])
    components = []
    for comp in obj["components"]:
        d0 = comp["d0"]
        graphs = []
        for g in comp["graphs"]:
            G = OuterplanarGraph.from_arcs([tuple(a) for a in g["arcs"]], rooted=True, m=len(degrees))
            if G.degrees != (d0,) + degrees:
                raise ValueError(f"graph degrees {G.degrees} inconsistent with d0={d0}")
            graphs.append(GraphBasis(G, [SparseTensor.from_json(t) for t in g["tensors"]]))
        components.append(Component(d0, graphs))
    return DecompositionReport(degrees, components, dict(obj.get("verified", {})))


def dumps_report(report: DecompositionReport) -> str:
    return json.dumps(report_to_json(report), ensure_ascii=False, separators=(",", ":"))
