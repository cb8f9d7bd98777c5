"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from egk import kernels
from egk.exact import adjacency_masks
from egk.generators import random_cubic


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    rng = random.Random(0)
    graphs = [random_cubic(n, seed) for n in (30, 40, 50) for seed in range(3)]
    dense = []
    for _ in range(5):
        n = 40
        dense.append([sum(1 << j for j in range(n) if j != i and rng.random() < 0.2)
                      for i in range(n)])
    # symmetrise the random masks
    for masks in dense:
        for i in range(len(masks)):
            for j in range(len(masks)):
                if masks[i] >> j & 1:
                    masks[j] |= 1 << i

    for name, mod in kernels.available_backends().items():
        mis = timed(lambda: [mod.max_independent_set(g.n, adjacency_masks(g)) for g in graphs])
        mis_dense = timed(lambda: [mod.max_independent_set(40, m) for m in dense])
        match = timed(lambda: [mod.maximum_matching(g.n, g.adj) for g in graphs * 20])
        cens = timed(lambda: mod.census(6, 0, 1 << 15), repeat=1)
        print(f"{name:7s} mis cubic {mis * 1e3:8.1f} ms  mis G(40,.2) {mis_dense * 1e3:8.1f} ms  "
              f"blossom {match * 1e3:7.1f} ms  census n=6 {cens:6.2f} s")


if __name__ == "__main__":
    main()
