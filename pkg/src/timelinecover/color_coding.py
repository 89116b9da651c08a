"""Randomized color-coding solvers for the partial problems, parameterized by t.

Temporal vertices (domination) or temporal edges (covering) are colored
uniformly with t colors; a boolean subset DP then decides whether some
timeline hits all t colors, which forces at least t distinct elements.
Repeating with fresh colorings gives one-sided error: yes answers carry a
verified witness, no answers are wrong with probability at most delta on
true yes-instances. The trial count ceil(e^t * ln(1/delta)) comes from the
standard success bound: a fixed t-element witness is colorful with
probability at least about e^{-t}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ActivityInterval,
    GuardExceeded,
    ProblemInstance,
    ProblemKind,
    TemporalGraph,
    Timeline,
    as_timeline,
    covered_temporal_edges,
    dominated_temporal_vertices,
    full_tiling,
)

MAX_COLOR_COUNT = 24  # 2^t boolean table rows
DEFAULT_DELTA = 0.01


@dataclass(frozen=True)
class ColoringTrialPlan:
    t: int
    trials: int
    master_seed: int
    delta: float

    @classmethod
    def auto(cls, t: int, delta: float = DEFAULT_DELTA, master_seed: int = 0) -> "ColoringTrialPlan":
        trials = max(1, math.ceil(math.exp(t) * math.log(1.0 / delta)))
        return cls(t=t, trials=trials, master_seed=master_seed, delta=delta)


def _elements(g: TemporalGraph, kind: ProblemKind) -> list:
    if kind.is_domination:
        return [(v, i) for v in range(1, g.n + 1) for i in range(1, g.T + 1)]
    return list(g.temporal_edges())


def _interval_starts(g: TemporalGraph, ell: int) -> list[int]:
    # Full-length intervals only; a clipped late start hits a subset of the
    # colors of the latest full start, so completeness is kept.
    if g.T >= ell + 1:
        return list(range(1, g.T - ell + 1))
    return [1]


def _color_sets(
    g: TemporalGraph, kind: ProblemKind, coloring: dict, v: int, ell: int
) -> list[int]:
    """Bitmask of colors hit by (v, a, min(a+ell, T)) for each candidate start a."""
    per_step = [0] * (g.T + 1)
    for i in range(1, g.T + 1):
        m = 0
        if kind.is_domination:
            m |= 1 << (coloring[(v, i)] - 1)
            for u, w in g.snapshots[i - 1]:
                if u == v:
                    m |= 1 << (coloring[(w, i)] - 1)
                elif w == v:
                    m |= 1 << (coloring[(u, i)] - 1)
        else:
            for e in g.snapshots[i - 1]:
                if v in e:
                    m |= 1 << (coloring[(e, i)] - 1)
        per_step[i] = m
    out = []
    for a in _interval_starts(g, ell):
        m = 0
        for i in range(a, min(a + ell, g.T) + 1):
            m |= per_step[i]
        out.append(m)
    return out


def cc_dp(
    g: TemporalGraph, k: int, ell: int, coloring: dict, kind: ProblemKind, t: int
) -> tuple[bool, Timeline | None]:
    """Does some k-activity ell-timeline hit all t colors of the coloring?

    Boolean table over (color subset, vertex prefix, intervals used by the
    last vertex); on success a witness timeline is rebuilt by re-descending
    the table, ties broken by the smallest interval start.
    """
    if t > MAX_COLOR_COUNT:
        raise GuardExceeded(f"2^{t} color subsets exceed the guard of 2^{MAX_COLOR_COUNT}")
    if t == 0:
        return True, ()
    size = 1 << t
    full = size - 1
    starts = _interval_starts(g, ell)
    color_sets = {
        v: _color_sets(g, kind, coloring, v, ell) for v in range(1, g.n + 1)
    }

    masks = np.arange(size, dtype=np.int64)
    # table[v][kk][S]: S dominable using v_1..v_v with exactly kk intervals of v_v.
    prev_full = np.zeros(size, dtype=bool)
    prev_full[0] = True  # DP[S, 0, k] is true only for the empty color set
    table: list[list[np.ndarray]] = [[]]
    for v in range(1, g.n + 1):
        rows = [prev_full]  # kk = 0 inherits the previous vertex at full budget
        for kk in range(1, k + 1):
            row = np.zeros(size, dtype=bool)
            for cm in color_sets[v]:
                row |= rows[kk - 1][masks & ~np.int64(cm)]
            rows.append(row)
        table.append(rows)
        prev_full = rows[k]
    if not bool(prev_full[full]):
        return False, None

    # Re-descend: from (full, n, k) each step either drops to kk-1 via some
    # start, or moves to the previous vertex at kk = 0.
    intervals: list[ActivityInterval] = []
    S, v, kk = full, g.n, k
    while v >= 1:
        if kk == 0:
            v -= 1
            kk = k
            continue
        for a, cm in zip(starts, color_sets[v]):
            if table[v][kk - 1][S & ~cm]:
                intervals.append(ActivityInterval(v, a, min(a + ell, g.T)))
                S &= ~cm
                kk -= 1
                break
        else:
            raise AssertionError("inconsistent color-coding table")
    return True, as_timeline(set(intervals))


def solve_partial_cc(
    inst: ProblemInstance, plan: ColoringTrialPlan | None = None
) -> tuple[bool, Timeline | None]:
    """Seeded Monte-Carlo driver; deterministic for a fixed (instance, plan).

    Trial i colors the elements by a generator seeded from
    (master_seed, i), so runs are reproducible and trials independent.
    """
    if not inst.kind.is_partial:
        raise ValueError("color coding applies to the partial problem kinds")
    g, k, ell = inst.graph, inst.k, inst.ell
    t = inst.target
    if plan is None:
        plan = ColoringTrialPlan.auto(t)
    if t == 0:
        return True, ()
    elements = _elements(g, inst.kind)
    if t > len(elements):
        return False, None
    if g.T < k * (ell + 1):
        # Every vertex can be active in every snapshot.
        witness = full_tiling(g, k, ell)
        return True, witness

    counter = (
        dominated_temporal_vertices if inst.kind.is_domination else covered_temporal_edges
    )
    for trial in range(plan.trials):
        rng = np.random.default_rng(np.random.SeedSequence([plan.master_seed, trial]))
        colors = rng.integers(1, t + 1, size=len(elements))
        coloring = {el: int(c) for el, c in zip(elements, colors)}
        ok, witness = cc_dp(g, k, ell, coloring, inst.kind, t)
        if ok:
            assert witness is not None
            count, _ = counter(g, witness)
            assert count >= t, "colorful witness must hit t distinct elements"
            return True, witness
    return False, None
