"""Property suite shared by ``outerplanar verify`` and the tests.

Each ``check_*`` function takes one degree tuple (plus an RNG where the
check samples) and returns True/False.  :func:`run_suite` sweeps every
tuple of positive degrees with bounded total.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .charring import multiplicity, multiplicity_by_recursion
from .decomp import check_weights, decompose
from .opgraph import OuterplanarGraph, count_graphs, enumerate_graphs, graph_from_leading, leading_basis_exponents
from .oracle import invariant_subspace_bruteforce, isotypic_dims_by_weights, span_equals
from .tensorspace import SparseTensor, build_t_G, componentwise_product, rooted_tensors


def compositions(max_sum: int) -> Iterator[tuple[int, ...]]:
    """Tuples of positive integers with sum at most ``max_sum``, by sum then lexicographically."""
    for total in range(1, max_sum + 1):
        for m in range(1, total + 1):
            for cuts in itertools.combinations(range(1, total), m - 1):
                bounds = (0,) + cuts + (total,)
                yield tuple(bounds[k + 1] - bounds[k] for k in range(m))


def random_partition(G: OuterplanarGraph, rng: random.Random, max_parts: int = 4) -> list[OuterplanarGraph]:
    """Split the edge copies of ``G`` at random into nonempty parts on the same vertices."""
    copies = [(i, j) for i, j, a in G.arcs for _ in range(a)]
    if not copies:
        return [G]
    k = rng.randint(1, min(max_parts, len(copies)))
    parts: list[list] = [[] for _ in range(k)]
    for c in copies:
        parts[rng.randrange(k)].append(c)
    return [OuterplanarGraph.from_arcs(p, rooted=G.rooted, m=G.m) for p in parts if p]


def _product(tensors: Sequence[SparseTensor]) -> SparseTensor:
    out = tensors[0]
    for t in tensors[1:]:
        out = componentwise_product(out, t)
    return out


def product_identity_unrooted(G: OuterplanarGraph, parts: Sequence[OuterplanarGraph]) -> bool:
    """``t_G`` equals the componentwise product of the parts' tensors."""
    return build_t_G(G) == _product([build_t_G(P) for P in parts])


def star_factorization(G: OuterplanarGraph) -> bool:
    """``t_{G,i} = t_{G*,i} . t_{G0}`` for every ``i``: root star times the rest."""
    star, rest = G.split()
    t_rest = build_t_G(rest)
    star_t = rooted_tensors(star)
    return all(t == componentwise_product(star_t[i], t_rest) for i, t in enumerate(rooted_tensors(G)))


def product_identity_rooted(G: OuterplanarGraph, parts: Sequence[OuterplanarGraph]) -> bool:
    """``t_{G,i}`` is the sum over ``i_1 + ... + i_k = i`` of products of the parts."""
    part_t = [rooted_tensors(P) for P in parts]
    for i, t in enumerate(rooted_tensors(G)):
        acc = SparseTensor(t.space)
        for split in itertools.product(*(range(len(pt)) for pt in part_t)):
            if sum(split) == i:
                acc = acc + _product([pt[s] for pt, s in zip(part_t, split)])
        if acc != t:
            return False
    return True


def check_multiplicity_routes(d: tuple[int, ...]) -> bool:
    weights = isotypic_dims_by_weights(d)
    for k in range(sum(d) + 1):
        a = multiplicity(d, k)
        if a != multiplicity_by_recursion(d, k) or a != weights.get(k, 0):
            return False
    return True


def check_residue_identity(d: tuple[int, ...]) -> bool:
    for d0 in range(sum(d) + 1):
        a = multiplicity(d, d0)
        if a != multiplicity((d0,) + d, 0) or a != count_graphs((d0,) + d, rooted=True):
            return False
    return True


def check_enumeration(d: tuple[int, ...]) -> bool:
    if len(enumerate_graphs(d)) != count_graphs(d):
        return False
    for d0 in range(sum(d) + 1):
        graphs = enumerate_graphs((d0,) + d, rooted=True)
        if len(graphs) != count_graphs((d0,) + d, rooted=True):
            return False
        for G in graphs:
            if graph_from_leading(leading_basis_exponents(G), rooted=True) != G:
                return False
    return True


def check_oracle(d: tuple[int, ...]) -> bool:
    kernel = invariant_subspace_bruteforce(d)
    tg = [build_t_G(G) for G in enumerate_graphs(d)]
    if len(kernel) != len(tg) or len(tg) != multiplicity(d, 0):
        return False
    if not tg:
        return True
    return span_equals(tg, kernel)


def check_decomposition(d: tuple[int, ...]) -> bool:
    report = decompose(d)
    return report.verified and check_weights(report)


def check_products(d: tuple[int, ...], rng: random.Random) -> bool:
    unrooted = enumerate_graphs(d)
    if unrooted:
        G = rng.choice(unrooted)
        if not product_identity_unrooted(G, random_partition(G, rng)):
            return False
    d0 = rng.choice(range(sum(d) % 2, sum(d) + 1, 2))
    rooted = enumerate_graphs((d0,) + d, rooted=True)
    if rooted:
        G = rng.choice(rooted)
        if not star_factorization(G):
            return False
        if not product_identity_rooted(G, random_partition(G, rng)):
            return False
    return True


@dataclass
class CheckResult:
    name: str
    passed: int
    failed: list[tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return not self.failed


CHECKS: dict[str, Callable] = {
    "multiplicity routes": check_multiplicity_routes,
    "residue identity": check_residue_identity,
    "enumeration": check_enumeration,
    "oracle equivalence": check_oracle,
    "decomposition": check_decomposition,
    "product identities": check_products,
}


def run_suite(max_sum: int = 8, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    tuples = list(compositions(max_sum))
    results = []
    for name, fn in CHECKS.items():
        res = CheckResult(name, 0, [])
        for d in tuples:
            ok = fn(d, rng) if fn is check_products else fn(d)
            if ok:
                res.passed += 1
            else:
                res.failed.append(d)
        results.append(res)
    return results
