import itertools

import numpy as np
import pytest

from timelinecover.core import (
    ProblemInstance,
    ProblemKind,
    StaticGraph,
    TemporalGraph,
)
from timelinecover.generators import demo_instance, gen_random


@pytest.fixture
def demo():
    return demo_instance()


def random_grid(count, seed0=0, n_max=4, T_max=5, k_max=2, ell_max=2, ps=(0.2, 0.5, 0.8)):
    """Seeded stream of (graph, k, ell, p) tuples within the small-grid bounds."""
    out = []
    for idx in range(count):
        rng = np.random.default_rng(seed0 + idx)
        n = int(rng.integers(1, n_max + 1))
        T = int(rng.integers(1, T_max + 1))
        k = int(rng.integers(1, k_max + 1))
        ell = int(rng.integers(0, ell_max + 1))
        p = float(rng.choice(ps))
        out.append((gen_random(n, T, p, seed0 + idx), k, ell, p))
    return out


def instance(g, kind, k, ell, t=None):
    pk = ProblemKind(kind)
    if pk.is_partial and t is None:
        raise ValueError("partial kinds need t")
    return ProblemInstance(g, pk, k, ell, t if pk.is_partial else None)


def all_unrestricted_timelines(g: TemporalGraph, k: int, ell: int):
    """Every timeline with <= k intervals of length <= ell per vertex.

    Exponential; only for tiny canonical-completeness checks (n, T <= 3).
    """
    intervals = [
        (a, b) for a in range(1, g.T + 1) for b in range(a, min(a + ell, g.T) + 1)
    ]
    per_vertex = []
    for _ in range(g.n):
        opts = []
        for size in range(k + 1):
            opts.extend(itertools.combinations(intervals, size))
        per_vertex.append(opts)
    for combo in itertools.product(*per_vertex):
        yield tuple(
            (v, a, b) for v, chosen in enumerate(combo, start=1) for a, b in chosen
        )


def static_ds_optimum(g: StaticGraph) -> int:
    """Smallest dominating set size by enumeration."""
    adj = g.adjacency()
    for r in range(g.n + 1):
        for S in itertools.combinations(range(1, g.n + 1), r):
            dom = set()
            for v in S:
                dom |= adj[v] | {v}
            if len(dom) == g.n:
                return r
    return g.n


def all_static_graphs(n: int):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for bits in range(1 << len(pairs)):
        yield StaticGraph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))
