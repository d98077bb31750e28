"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from outerplanar import _pykernels, decompose, enumerate_graphs
from outerplanar.oracle import tensor_rows

try:
    from outerplanar import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def workloads():
    graphs = enumerate_graphs((4, 2, 2, 3, 1, 2), rooted=True)
    arcs = [([(i, j, a) for i, j, a in G.arcs], len(G.degrees)) for G in graphs]
    report = decompose((3, 3, 3), verify=False)
    tensors = [(t.as_dict(), t.degrees) for *_, t in report.rows()]
    rows = tensor_rows([t for *_, t in report.rows()])
    n = report.dimension
    return {
        "orientation_sum": lambda k: [k.orientation_sum(a, nv, True) for a, nv in arcs],
        "lie_apply": lambda k: [k.lie_apply(e, d, op) for e, d in tensors for op in (0, 1, 2)],
        "rank_mod_p": lambda k: k.rank_mod_p(rows, n, 2**31 - 1),
        "y_degree_histogram": lambda k: k.y_degree_histogram((4, 4, 4, 4, 4, 4)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':<20} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for name, fn in workloads().items():
        assert fn(_pykernels) == fn(_ckernels), name
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<20} {py * 1e3:12.2f} {cy * 1e3:12.2f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
