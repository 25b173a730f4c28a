"""Compare the compiled and pure-Python kernel backends.

Run with `python benchmarks/bench_kernels.py [--sizes ...]`.  Set
CONVEXIA_PURE=1 to check which backend the package itself selected.
"""

from __future__ import annotations

import argparse
import random
import time

import convexia._purecore as pure
from convexia.generators import random_graph, random_tree


def _compiled():
    try:
        import convexia._fastcore as fast
        return fast
    except ImportError:
        return None


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_bitmask_kernels(fast, rng, n: int) -> None:
    g = random_graph(n, 0.3, rng)
    masks = g.masks
    for name in ("all_pairs_dist", "geodesic_pair_masks",
                 "chordless_pair_masks", "connected_mask_table"):
        if name == "connected_mask_table" and n > 18:
            continue
        tp = _time(getattr(pure, name), n, masks)
        row = f"  {name:24s} n={n:3d}  pure {tp * 1e3:9.2f} ms"
        if fast is not None:
            tf = _time(getattr(fast, name), n, masks)
            row += f"  compiled {tf * 1e3:9.2f} ms  ({tp / tf:5.1f}x)"
        print(row)


def bench_tree_dp(fast, rng, n: int) -> None:
    t = random_tree(n, rng)
    offs, nbrs = t.csr()
    tp = _time(pure.tree_g2, n, offs, nbrs, repeat=1)
    row = f"  tree_g2                  n={n:8d}  pure {tp:8.3f} s"
    if fast is not None:
        tf = _time(fast.tree_g2, n, offs, nbrs, repeat=1)
        row += f"  compiled {tf:8.3f} s  ({tp / tf:5.1f}x)"
    print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--graph-sizes", type=int, nargs="*",
                        default=[12, 16, 18])
    parser.add_argument("--tree-sizes", type=int, nargs="*",
                        default=[10_000, 100_000, 1_000_000])
    args = parser.parse_args()
    fast = _compiled()
    print(f"compiled backend: {'available' if fast else 'NOT available'}")
    rng = random.Random(args.seed)
    print("bitmask kernels:")
    for n in args.graph_sizes:
        bench_bitmask_kernels(fast, rng, n)
    print("tree 2-geodetic DP:")
    for n in args.tree_sizes:
        bench_tree_dp(fast, rng, n)


if __name__ == "__main__":
    main()
