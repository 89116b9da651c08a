"""Bounded-depth branching for the full problems, parameterized by n + k.

Both searches walk time forward to the first unsatisfied temporal element
and branch on who fixes it, always committing an interval that starts at
the failing step (starting later never helps, starting earlier is
dominated by shifting). No memoization: callers wanting speed use the
bag-profile DPs.
"""

from __future__ import annotations

from .core import ActivityInterval, TemporalGraph, Timeline, as_timeline


def _first_undominated(g: TemporalGraph, active_at: list[set[int]]) -> tuple[int, int] | None:
    for i in range(1, g.T + 1):
        act = active_at[i - 1]
        dominated = set(act)
        for u, v in g.snapshots[i - 1]:
            if u in act:
                dominated.add(v)
            if v in act:
                dominated.add(u)
        for v in range(1, g.n + 1):
            if v not in dominated:
                return v, i
    return None


def _first_uncovered(g: TemporalGraph, active_at: list[set[int]]) -> tuple[tuple[int, int], int] | None:
    for i in range(1, g.T + 1):
        act = active_at[i - 1]
        for e in sorted(g.snapshots[i - 1]):
            if e[0] not in act and e[1] not in act:
                return e, i
    return None


class _Search:
    def __init__(self, g: TemporalGraph, k: int, ell: int):
        self.g = g
        self.k = k
        self.ell = ell
        self.counters = [0] * (g.n + 1)
        self.chosen: list[ActivityInterval] = []
        self.active_at: list[set[int]] = [set() for _ in range(g.T)]
        self.max_depth = 0

    def push(self, u: int, i: int) -> ActivityInterval:
        iv = ActivityInterval(u, i, min(i + self.ell, self.g.T))
        self.chosen.append(iv)
        self.counters[u] += 1
        for j in range(iv.a, iv.b + 1):
            self.active_at[j - 1].add(u)
        return iv

    def pop(self, iv: ActivityInterval) -> None:
        self.chosen.pop()
        self.counters[iv.v] -= 1
        still = {jv for jv in self.chosen if jv.v == iv.v}
        for j in range(iv.a, iv.b + 1):
            if not any(a <= j <= b for _, a, b in still):
                self.active_at[j - 1].discard(iv.v)


def solve_ds_branching(g: TemporalGraph, k: int, ell: int) -> tuple[bool, Timeline | None]:
    """Branch over the closed neighborhood of the earliest undominated vertex."""
    search = _Search(g, k, ell)

    def rec(depth: int) -> bool:
        search.max_depth = max(search.max_depth, depth)
        fail = _first_undominated(g, search.active_at)
        if fail is None:
            return True
        v, i = fail
        neighbors = {v}
        for a, b in g.snapshots[i - 1]:
            if a == v:
                neighbors.add(b)
            if b == v:
                neighbors.add(a)
        # v itself first, then ascending ids: reproducible search trees.
        order = [v] + sorted(neighbors - {v})
        for u in order:
            if search.counters[u] + 1 > k:
                continue
            iv = search.push(u, i)
            if rec(depth + 1):
                return True
            search.pop(iv)
        return False

    if rec(0):
        return True, as_timeline(search.chosen)
    return False, None


def solve_vc_branching(g: TemporalGraph, k: int, ell: int) -> tuple[bool, Timeline | None]:
    """Branch on the two endpoints of the earliest uncovered temporal edge."""
    search = _Search(g, k, ell)

    def rec(depth: int) -> bool:
        search.max_depth = max(search.max_depth, depth)
        fail = _first_uncovered(g, search.active_at)
        if fail is None:
            return True
        (u, v), i = fail
        for w in (u, v):
            if search.counters[w] + 1 > k:
                continue
            iv = search.push(w, i)
            if rec(depth + 1):
                return True
            search.pop(iv)
        return False

    if rec(0):
        return True, as_timeline(search.chosen)
    return False, None
