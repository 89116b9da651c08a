"""Benchmark the compiled layer kernels against the NumPy fallback.

Run as ``python -m timelinecover.benchmarks``. Times the bag-profile DP on
a seeded long-lifetime chain family with both engines, plus the raw kernel
primitives on synthetic arrays.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import engine
from .core import TemporalGraph
from .dp_vimw import solve_pvc


def chain_family(T: int) -> TemporalGraph:
    """Path-over-time: edge (j, j+1) lives at steps 2j-1..2j+1; vimw stays <= 3."""
    n = max(2, (T + 1) // 2)
    snaps: list[list[tuple[int, int]]] = [[] for _ in range(T)]
    for j in range(1, n):
        for i in (2 * j - 1, 2 * j, 2 * j + 1):
            if 1 <= i <= T:
                snaps[i - 1].append((j, j + 1))
    return TemporalGraph.from_edge_lists(n, snaps)


def _time(fn, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def bench_dp(T_values: list[int]) -> None:
    print(f"{'T':>8} {'engine':>10} {'solve_pvc s':>12} {'optimum':>9}")
    for T in T_values:
        g = chain_family(T)
        for name in _engines():
            engine.set_engine(name)
            out = {}

            def run():
                out["res"] = solve_pvc(g, 1, 1)

            secs = _time(run)
            print(f"{T:>8} {name:>10} {secs:>12.3f} {out['res'].optimum:>9}")
    engine.set_engine(None)


def bench_kernels(size: int, repeats: int) -> None:
    rng = np.random.default_rng(0)
    r = 6
    pre, post = size, 1
    vals = rng.integers(0, 1000, size=pre * r * post).astype(np.int64)
    w = rng.integers(0, 50, size=r).astype(np.int64)
    m = rng.integers(-5, 5, size=(r, r)).astype(np.int64)
    print(f"\n{'kernel':>12} {'engine':>10} {'best s':>10}  (pre={pre}, r={r})")
    for name in _engines():
        engine.set_engine(name)
        secs = _time(lambda: engine.project_max(vals, pre, r, post, w), repeats)
        print(f"{'project_max':>12} {name:>10} {secs:>10.6f}")
        secs = _time(lambda: engine.trans_max(vals, pre, r, post, r, m), repeats)
        print(f"{'trans_max':>12} {name:>10} {secs:>10.6f}")
    engine.set_engine(None)


def _engines() -> list[str]:
    names = ["pure"]
    if engine.compiled_available():
        names.insert(0, "compiled")
    else:
        print("note: compiled kernels unavailable, benchmarking the fallback only")
    return names


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,5000,10000", help="chain lifetimes")
    parser.add_argument("--kernel-size", type=int, default=4096)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    bench_dp([int(x) for x in args.sizes.split(",")])
    bench_kernels(args.kernel_size, args.repeats)


if __name__ == "__main__":
    main()
