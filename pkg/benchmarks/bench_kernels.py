"""Time each kernel under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Numba timings exclude the first (compiling) call.
"""

import argparse
import timeit

import numpy as np

from primegraph import kernels
from primegraph._accel import HAVE_NUMBA
from primegraph.edgeideal import closed_form_generators
from primegraph.graph import abstract_split_graph
from primegraph.ring import make_ring


def workloads():
    r = make_ring([2, 2, 2, 3, 5])
    prime = r.coords[:, 0] == 0
    yield "ideal_witness", (r.coords, r.moduli, r.weights, prime)
    yield "product_in_set", (r.coords, r.moduli, r.weights, prime)

    # the cube of an edge ideal plus every generator times each variable: only degree 6 survives
    cube = closed_form_generators(4, 5, 3).rows
    raw = np.unique(np.vstack([cube] + [cube + e for e in np.eye(9, dtype=np.int64)]), axis=0)
    deg = raw.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    yield "minimal_mask", (np.ascontiguousarray(raw[order]), deg[order])

    rows = np.ascontiguousarray(closed_form_generators(4, 5, 3).rows)
    lex = np.ascontiguousarray(rows[np.lexsort(rows.T[::-1])])
    yield "exchange_violation", (rows, lex)
    yield "linear_quotient_ranks", (rows,)

    g = abstract_split_graph(4, 12)
    eu = np.array([i for i, _ in g.edge_indices], dtype=np.int64)
    ev = np.array([j for _, j in g.edge_indices], dtype=np.int64)
    yield "minimal_cover_masks", (len(g), eu, ev)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"{'kernel':<24}{'size':>10}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, inputs in workloads():
        nb, npy = kernels.KERNELS[name]
        size = max(np.size(x) for x in inputs)
        t_np = min(timeit.repeat(lambda: npy(*inputs), number=1, repeat=args.repeat)) * 1e3
        if HAVE_NUMBA:
            nb(*inputs)
            t_nb = min(timeit.repeat(lambda: nb(*inputs), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<24}{size:>10}{t_nb:>12.2f}{t_np:>12.2f}{t_np / t_nb:>9.1f}x")
        else:
            print(f"{name:<24}{size:>10}{'-':>12}{t_np:>12.2f}{'-':>10}")


if __name__ == "__main__":
    main()
