#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Runs representative solves on both backends and prints wall times plus the
speedup.  Results are checked for equality on every case, so this doubles
as an end-to-end backend consistency check.

  python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from manyrobbers import _backend, pursuit, zerovis
from manyrobbers.families import (complete, complete_bipartite, cycle,
                                  h_graph, subdivided_star, wheel)
from manyrobbers.smallgraphs import connected_graphs
from manyrobbers.values import value_to_json

PURSUIT_CASES = [
    ("H(10), k=1, m=3", lambda: (h_graph(10), 1, 3)),
    ("T_3, k=1, m=6", lambda: (subdivided_star(3), 1, 6)),
    ("W_5, k=1, m=8", lambda: (wheel(5), 1, 8)),
    ("K_4, k=1, m=27", lambda: (complete(4), 1, 27)),
    ("K_6 minus one edge, k=2, m=8",
     lambda: (connected_graphs(6)[-2], 2, 8)),
    ("C_7, k=2, m=8", lambda: (cycle(7), 2, 8)),
]

CLEARING_CASES = [
    ("K_{4,5} clearing, k=4", lambda: (complete_bipartite(4, 5), 4)),
    ("W_7 clearing, k=2", lambda: (wheel(7), 2)),
]


def time_backend(name: str, fn, repeat: int) -> float:
    _backend.set_backend(name)
    best = float("inf")
    for _ in range(repeat):
        pursuit.clear_caches()
        zerovis.clear_caches()
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=2)
    args = parser.parse_args()

    # warm the jit once so compilation is not billed to the first case
    _backend.set_backend("numba")
    pursuit.capture_time(cycle(5), 1, 2)

    print(f"{'case':<50} {'numba':>9} {'numpy':>9} {'speedup':>8}  result")
    print("-" * 92)
    for label, make in PURSUIT_CASES:
        graph, k, m = make()
        results = {}

        def solve(g=graph, kk=k, mm=m):
            results[_backend.backend_name()] = pursuit.capture_time(g, kk, mm)

        t_jit = time_backend("numba", solve, args.repeat)
        t_np = time_backend("numpy", solve, args.repeat)
        assert results["numba"] == results["numpy"]
        print(f"{label:<50} {t_jit:>8.3f}s {t_np:>8.3f}s "
              f"{t_np / t_jit:>7.1f}x  capt={value_to_json(results['numba'])}")

    for label, make in CLEARING_CASES:
        graph, k = make()
        results = {}

        def clear(g=graph, kk=k):
            results[_backend.backend_name()] = \
                zerovis.zero_vis_capture_time(g, kk)

        t_jit = time_backend("numba", clear, args.repeat)
        t_np = time_backend("numpy", clear, args.repeat)
        assert results["numba"] == results["numpy"]
        print(f"{label:<50} {t_jit:>8.3f}s {t_np:>8.3f}s "
              f"{t_np / t_jit:>7.1f}x  time={value_to_json(results['numba'])}")

    _backend.set_backend("auto")


if __name__ == "__main__":
    main()
