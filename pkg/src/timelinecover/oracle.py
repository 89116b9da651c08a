"""Exhaustive exact solver over canonical timelines; the ground truth everywhere.

Canonical form: for each vertex pick a set of at most k start times; each
start a becomes the interval (a, min(a + ell, T)). Extending an interval to
full length (clipped at T) never loses covered or dominated temporal
elements, so this enumeration is complete for maximization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .core import (
    ActivityInterval,
    BudgetExceeded,
    ProblemInstance,
    TemporalGraph,
    Timeline,
    as_timeline,
)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: Timeline
    decision: bool


def search_space_size(n: int, T: int, k: int) -> int:
    """(sum_j C(T, j) for j <= k) ** n, the canonical state count."""
    per_vertex = sum(comb(T, j) for j in range(min(k, T) + 1))
    return per_vertex**n


def _element_bits(g: TemporalGraph, domination: bool) -> dict:
    """Bit position per temporal element (vertex or edge flavor)."""
    bits: dict = {}
    if domination:
        for v in range(1, g.n + 1):
            for i in range(1, g.T + 1):
                bits[(v, i)] = len(bits)
    else:
        for e, i in g.temporal_edges():
            bits[(e, i)] = len(bits)
    return bits


def _vertex_choices(g: TemporalGraph, v: int, k: int, ell: int, bits: dict, domination: bool):
    """(mask, starts) per canonical start set, deduplicated by contribution mask.

    A start set contributes, for every step its intervals intersect, the
    incident temporal edges (covering) or the closed neighborhood
    (domination). Sets with identical contributions collapse to the first,
    so the sparsest start set is kept.
    """
    step_mask = [0] * (g.T + 1)
    for i in range(1, g.T + 1):
        m = 0
        if domination:
            m |= 1 << bits[(v, i)]
            for u, w in g.snapshots[i - 1]:
                if u == v:
                    m |= 1 << bits[(w, i)]
                elif w == v:
                    m |= 1 << bits[(u, i)]
        else:
            for e in g.snapshots[i - 1]:
                if v in e:
                    m |= 1 << bits[(e, i)]
        step_mask[i] = m

    choices: list[tuple[int, tuple[int, ...]]] = []
    seen_masks: set[int] = set()
    for size in range(min(k, g.T) + 1):
        for starts in combinations(range(1, g.T + 1), size):
            m = 0
            for a in starts:
                for i in range(a, min(a + ell, g.T) + 1):
                    m |= step_mask[i]
            if m not in seen_masks:
                seen_masks.add(m)
                choices.append((m, starts))
    # Rich contributions first so good incumbents appear early.
    choices.sort(key=lambda c: (-c[0].bit_count(), c[1]))
    return choices


def oracle_solve(inst: ProblemInstance, budget: int = DEFAULT_BUDGET, prune: bool = True) -> OracleResult:
    """Exact optimum by depth-first enumeration with an optimistic-bound prune.

    Raises BudgetExceeded when the canonical search space is larger than
    `budget`; callers should pick a real algorithm then.
    """
    g = inst.graph
    space = search_space_size(g.n, g.T, inst.k)
    if space > budget:
        raise BudgetExceeded(
            f"canonical search space (~2^{space.bit_length() - 1}) exceeds budget {budget}"
        )

    domination = inst.kind.is_domination
    bits = _element_bits(g, domination)
    total_bits = len(bits)
    choices = [
        _vertex_choices(g, v, inst.k, inst.ell, bits, domination) for v in range(1, g.n + 1)
    ]

    # Optimistic bound: everything the vertices from position j on could hit.
    suffix_full = [0] * (g.n + 1)
    for j in range(g.n - 1, -1, -1):
        all_bits = 0
        for m, _ in choices[j]:
            all_bits |= m
        suffix_full[j] = suffix_full[j + 1] | all_bits

    best_count = -1
    best_choice_idx: list[int] = []
    stack_idx = [0] * g.n
    vectorized = total_bits <= 63
    if vectorized:
        last_masks = np.array([m for m, _ in choices[g.n - 1]], dtype=np.uint64)

    def dfs(j: int, acc: int) -> None:
        nonlocal best_count, best_choice_idx
        if best_count == total_bits:
            return
        if prune and (acc | suffix_full[j]).bit_count() <= best_count:
            return
        if vectorized and j == g.n - 1:
            counts = np.bitwise_count(np.uint64(acc) | last_masks)
            pos = int(np.argmax(counts))
            cnt = int(counts[pos])
            if cnt > best_count:
                best_count = cnt
                stack_idx[j] = pos
                best_choice_idx = stack_idx[: j + 1]
            return
        if j == g.n:
            cnt = acc.bit_count()
            if cnt > best_count:
                best_count = cnt
                best_choice_idx = stack_idx[:j]
            return
        for idx, (m, _) in enumerate(choices[j]):
            stack_idx[j] = idx
            dfs(j + 1, acc | m)

    dfs(0, 0)

    intervals = []
    for v, idx in enumerate(best_choice_idx, start=1):
        for a in choices[v - 1][idx][1]:
            intervals.append(ActivityInterval(v, a, min(a + inst.ell, g.T)))
    witness = as_timeline(intervals)
    return OracleResult(optimum=best_count, witness=witness, decision=best_count >= inst.target)
