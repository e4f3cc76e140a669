"""Compare the compiled and pure-Python edit-distance backends.

    python3 benchmarks/bench_kernels.py [--lengths 8 16 32 64] [--repeat 200]

Times ``distance`` and ``align`` on random sequence pairs, plus a full
``next_action`` call on a 64-vertex graph, for each backend.
"""
import argparse
import timeit

import numpy as np

from doo_route import _dp_py, router
from doo_route.spatial_graph import SpatialGraph

try:
    from doo_route import _dp
except ImportError:
    _dp = None


def _pair(rng, n):
    return tuple(int(x) for x in rng.integers(-1, 63, n)), tuple(int(x) for x in rng.integers(-1, 63, n))


def _graph(rng, n=64):
    ids = list(range(-1, n - 1))
    edges = {(min(a, b), max(a, b)) for a, b in zip(ids, ids[1:])}
    for _ in range(n):
        a, b = (int(x) for x in rng.choice(ids, 2, replace=False))
        edges.add((min(a, b), max(a, b)))
    return SpatialGraph.from_edges(ids, edges)


def _walk(rng, g, n):
    adj = g.adjacency()
    c = [int(rng.integers(-1, 63))]
    while len(c) < n:
        nb = adj[c[-1]]
        c.append(nb[int(rng.integers(len(nb)))])
    return tuple(c)


def _us(stmt, repeat):
    # best of 5 rounds, per call
    return min(timeit.repeat(stmt, number=repeat, repeat=5)) / repeat * 1e6


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lengths", type=int, nargs="+", default=[8, 16, 32, 64])
    ap.add_argument("--repeat", type=int, default=200)
    a = ap.parse_args()
    rng = np.random.default_rng(0)
    backends = [("python", _dp_py)] + ([("cython", _dp)] if _dp is not None else [])
    print(f"{'op':<10}{'len':>5}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for n in a.lengths:
        x, y = _pair(rng, n)
        for op in ("distance", "align"):
            t = [_us(lambda m=m: getattr(m, op)(x, y), a.repeat) for _, m in backends]
            sp = f"{t[0] / t[-1]:8.1f}x" if len(t) > 1 else ""
            print(f"{op:<10}{n:>5}" + "".join(f"{v:>10.1f}us" for v in t) + sp)

    g = _graph(rng)
    cur, goal = _walk(rng, g, 64), _walk(rng, g, 64)
    t = []
    for _, m in backends:
        saved = {k: getattr(router.kernels, k) for k in ("distance", "table", "trace", "align")}
        for k in saved:
            setattr(router.kernels, k, getattr(m, k))
        try:
            t.append(_us(lambda: router.next_action(cur, goal, g), max(1, a.repeat // 10)))
        finally:
            for k, v in saved.items():
                setattr(router.kernels, k, v)
    sp = f"{t[0] / t[-1]:8.1f}x" if len(t) > 1 else ""
    print(f"{'plan':<10}{64:>5}" + "".join(f"{v:>10.1f}us" for v in t) + sp)


if __name__ == "__main__":
    main()
