"""Layered dynamic programs over vertex-membership bags, for covering and domination.

One DP layer per time step. A layer's table is indexed by bag profiles:
per bag vertex a state (curr, pos) packed into a fixed-radix digit, where
curr in [0, k] is the index of the current activity interval (0 = before
the first; "at most" semantics) and pos in [0, ell+1] is the 1-based
position inside it (0 = not currently active). Only the previous layer is
kept in memory; backpointers go to an append-only log of predecessor
profiles, one array per layer, from which witnesses are rebuilt.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import engine
from .core import (
    ActivityInterval,
    BudgetExceeded,
    ProblemInstance,
    ProblemKind,
    TemporalGraph,
    Timeline,
    as_timeline,
    full_tiling,
    tile_interval,
)
from .params import (
    isolated_vertices,
    largest_bag_indices,
    vertex_membership_sequence,
)

NEG = -(1 << 58)

DEFAULT_DP_BUDGET = 10**8


@dataclass(frozen=True)
class DpResult:
    optimum: int
    witness: Timeline


@dataclass
class ReductionLedger:
    """What preprocessing committed: removed vertices, their intervals, and the yield."""

    removed_vertices: dict[int, str] = field(default_factory=dict)
    credit: int = 0
    forced_intervals: Timeline = ()


# -------------------- state space helpers --------------------


def _radix(k: int, ell: int) -> int:
    return (k + 1) * (ell + 2)


def _decode_state(s: int, ell: int) -> tuple[int, int]:
    return divmod(s, ell + 2)


_MATRIX_CACHE: dict[tuple[int, int, int], np.ndarray] = {}


def _transition_matrix(k: int, ell: int, mi: int) -> np.ndarray:
    """Compatibility of (curr', pos') at step i-1 with (curr, pos) at step i.

    mi = min(i - 1, ell + 1): the only way i enters the conditions, as the
    position of an interval ending exactly at step i-1 (clipped when the
    interval would have started before step 1).
    """
    key = (k, ell, mi)
    cached = _MATRIX_CACHE.get(key)
    if cached is not None:
        return cached
    R = _radix(k, ell)
    M = np.full((R, R), NEG, dtype=np.int64)
    for s_new in range(R):
        c, p = _decode_state(s_new, ell)
        if c == 0 and p > 0:
            continue
        for s_old in range(R):
            c2, p2 = _decode_state(s_old, ell)
            if c2 == 0 and p2 > 0:
                continue
            if p >= 2:
                ok = c2 <= c and p2 == p - 1
            elif p == 1 and c == 1:
                ok = c2 == 0 and p2 == 0
            elif p == 1:  # c > 1, a later interval starts now
                ok = c2 <= c - 1 and p2 in (0, mi)
            elif c >= 1:  # p == 0, inactive now
                ok = c2 <= c and p2 in (0, mi)
            else:  # c == 0, p == 0: still before any interval
                ok = c2 == 0 and p2 == 0
            if ok:
                M[s_old, s_new] = 0
    _MATRIX_CACHE[key] = M
    return M


_AXIS_STATE_CACHE: dict[tuple[int, int], list[np.ndarray]] = {}


def _axis_states(R: int, m: int) -> list[np.ndarray]:
    """For each bag axis j, the per-flat-profile state digit (C-order, axis 0 slowest)."""
    key = (R, m)
    cached = _AXIS_STATE_CACHE.get(key)
    if cached is None:
        idx = np.arange(R**m, dtype=np.int64)
        cached = [((idx // R ** (m - 1 - j)) % R).astype(np.int32) for j in range(m)]
        _AXIS_STATE_CACHE[key] = cached
    return cached


def _profile_or_words(
    m: int, R: int, ell: int, vertex_masks: list[int], nbits: int, base: int
) -> list[np.ndarray]:
    """Per-profile OR of vertex_masks over active (pos >= 1) bag vertices, plus base.

    Masks are arbitrary-width Python ints, chunked into 64-bit words.
    """
    nwords = max(1, (nbits + 63) // 64)
    size = R**m
    words = []
    states = _axis_states(R, m)
    for w in range(nwords):
        shift = 64 * w
        acc = np.full(size, (base >> shift) & 0xFFFFFFFFFFFFFFFF, dtype=np.uint64)
        for j in range(m):
            chunk = (vertex_masks[j] >> shift) & 0xFFFFFFFFFFFFFFFF
            if chunk == 0:
                continue
            tbl = np.array(
                [chunk if _decode_state(s, ell)[1] >= 1 else 0 for s in range(R)],
                dtype=np.uint64,
            )
            acc |= tbl[states[j]]
        words.append(acc)
    return words


def _popcount_words(words: list[np.ndarray]) -> np.ndarray:
    total = np.zeros(words[0].shape, dtype=np.int64)
    for w in words:
        total += np.bitwise_count(w).astype(np.int64)
    return total


# -------------------- per-layer plans --------------------


@dataclass
class _LayerPlan:
    bag: tuple[int, ...]
    a1: np.ndarray
    enter_w: dict[int, np.ndarray]
    leave_w: dict[int, np.ndarray]
    guard: np.ndarray | None = None


def _valid_state_weights(k: int, ell: int, pos_cap: int, value_fn) -> np.ndarray:
    """R-vector: value_fn(curr, pos) on valid states with pos <= pos_cap, else NEG."""
    R = _radix(k, ell)
    w = np.full(R, NEG, dtype=np.int64)
    for s in range(R):
        c, p = _decode_state(s, ell)
        if (c == 0 and p > 0) or p > pos_cap:
            continue
        w[s] = value_fn(c, p)
    return w


def _pvc_plans(g: TemporalGraph, k: int, ell: int, bags: list[tuple[int, ...]]) -> list[_LayerPlan]:
    R = _radix(k, ell)
    plans = []
    prev: tuple[int, ...] = ()
    for i in range(1, g.T + 1):
        bag = bags[i - 1]
        m = len(bag)
        pos_in_bag = {v: j for j, v in enumerate(bag)}
        edges = sorted(e for e in g.snapshots[i - 1])
        edge_masks = [0] * m
        for idx, (u, v) in enumerate(edges):
            edge_masks[pos_in_bag[u]] |= 1 << idx
            edge_masks[pos_in_bag[v]] |= 1 << idx
        words = _profile_or_words(m, R, ell, edge_masks, len(edges), 0)
        a1 = _popcount_words(words)
        cap = min(i, ell + 1)
        enter_w = {
            v: _valid_state_weights(k, ell, cap, lambda c, p: 0)
            for v in bag
            if v not in prev
        }
        leave_w = {
            v: _valid_state_weights(k, ell, ell + 1, lambda c, p: 0)
            for v in prev
            if v not in pos_in_bag
        }
        plans.append(_LayerPlan(bag=bag, a1=a1, enter_w=enter_w, leave_w=leave_w))
        prev = bag
    return plans


def _pds_enter_value(k: int, ell: int, i: int):
    def fn(c: int, p: int) -> int:
        if p == 0:
            return min(c * (ell + 1), i - 1)
        return min((c - 1) * (ell + 1) + p - 1, i - 1)

    return fn


def _pds_leave_value(k: int, ell: int, i: int, T: int):
    def fn(c: int, p: int) -> int:
        if p == 0:
            return min((k - c) * (ell + 1), T - i + 1)
        return min((k - c) * (ell + 1) + (ell + 1) - p, T - i + 1)

    return fn


def _pds_plans(
    g: TemporalGraph,
    k: int,
    ell: int,
    dp_bags: list[tuple[int, ...]],
    universe_bags: list[tuple[int, ...]],
    base_active: list[set[int]] | None = None,
    required: list[set[int]] | None = None,
) -> list[_LayerPlan]:
    """Domination plans; dp_bags may be a restriction of the full universe bags.

    base_active[i-1] holds vertices outside the dp bag whose activity at
    step i is already committed; required[i-1] holds committed-inactive
    vertices that the step's actives must dominate (else the profile dies).
    """
    R = _radix(k, ell)
    plans = []
    prev: tuple[int, ...] = ()
    for i in range(1, g.T + 1):
        bag = dp_bags[i - 1]
        m = len(bag)
        universe = universe_bags[i - 1]
        uidx = {v: j for j, v in enumerate(universe)}
        adj = g.adjacency_at(i)
        nbr_mask = []
        for v in bag:
            mask = 1 << uidx[v]
            for u in adj.get(v, ()):
                mask |= 1 << uidx[u]
            nbr_mask.append(mask)
        base = 0
        if base_active is not None:
            for v in sorted(base_active[i - 1]):
                mask = 1 << uidx[v]
                for u in adj.get(v, ()):
                    mask |= 1 << uidx[u]
                base |= mask
        words = _profile_or_words(m, R, ell, nbr_mask, len(universe), base)
        a1 = _popcount_words(words)
        guard = None
        if required is not None and required[i - 1]:
            need = 0
            for v in required[i - 1]:
                need |= 1 << uidx[v]
            guard = np.ones(R**m, dtype=bool)
            for w_i, word in enumerate(words):
                chunk = np.uint64((need >> (64 * w_i)) & 0xFFFFFFFFFFFFFFFF)
                if chunk:
                    guard &= (chunk & ~word) == 0
        cap = min(i, ell + 1)
        pos_in_bag = set(bag)
        enter_w = {
            v: _valid_state_weights(k, ell, cap, _pds_enter_value(k, ell, i))
            for v in bag
            if v not in prev
        }
        leave_w = {
            v: _valid_state_weights(k, ell, ell + 1, _pds_leave_value(k, ell, i, g.T))
            for v in prev
            if v not in pos_in_bag
        }
        plans.append(_LayerPlan(bag=bag, a1=a1, enter_w=enter_w, leave_w=leave_w, guard=guard))
        prev = bag
    return plans


# -------------------- the layered runner --------------------


def _run_layers(k: int, ell: int, plans: list[_LayerPlan], budget: int):
    """Forward pass; returns final values and the per-layer predecessor log."""
    R = _radix(k, ell)
    vals = np.zeros(1, dtype=np.int64)
    prov_log: list[np.ndarray] = []
    prev_bag: tuple[int, ...] = ()
    for i, plan in enumerate(plans, start=1):
        bag = plan.bag
        if R ** len(bag) > budget:
            raise BudgetExceeded(
                f"layer {i}: {R ** len(bag)} profiles exceed dp budget {budget}"
            )
        bag_set = set(bag)
        axes = list(prev_bag)
        prov = np.arange(len(vals), dtype=np.int64)
        M = _transition_matrix(k, ell, min(i - 1, ell + 1))

        for v in [u for u in prev_bag if u not in bag_set]:
            j = axes.index(v)
            pre, post = R**j, R ** (len(axes) - 1 - j)
            vals, arg = engine.project_max(vals, pre, R, post, plan.leave_w[v])
            prov = np.take_along_axis(
                prov.reshape(pre, R, post), arg.reshape(pre, 1, post), axis=1
            ).reshape(-1)
            axes.pop(j)

        prev_set = set(prev_bag)
        for v in [u for u in axes]:
            j = axes.index(v)
            pre, post = R**j, R ** (len(axes) - 1 - j)
            vals, arg = engine.trans_max(vals, pre, R, post, R, M)
            prov = np.take_along_axis(
                prov.reshape(pre, R, post), arg.reshape(pre, R, post), axis=1
            ).reshape(-1)

        for v in bag:
            if v in prev_set:
                continue
            j = sum(1 for u in axes if u < v)
            pre, post = R**j, R ** (len(axes) - j)
            vals = (vals.reshape(pre, 1, post) + plan.enter_w[v][None, :, None]).reshape(-1)
            prov = np.repeat(prov.reshape(pre, 1, post), R, axis=1).reshape(-1)
            axes.insert(j, v)

        assert axes == list(bag)
        vals = vals + plan.a1
        if plan.guard is not None:
            vals = np.where(plan.guard, vals, NEG)
        np.maximum(vals, NEG, out=vals)
        prov_log.append(prov)
        prev_bag = bag
    return vals, prov_log


def _final_readoff(vals: np.ndarray, bag: tuple[int, ...], k: int, ell: int, T: int):
    """Best entry with curr = k everywhere and pos in {0, min(ell+1, T)}."""
    R = _radix(k, ell)
    m = len(bag)
    allowed = {k * (ell + 2), k * (ell + 2) + min(ell + 1, T)}
    ok = np.ones(R**m, dtype=bool)
    for j in range(m):
        states = _axis_states(R, m)[j]
        ok &= np.isin(states, np.array(sorted(allowed), dtype=np.int32))
    masked = np.where(ok, vals, NEG)
    idx = int(np.argmax(masked))
    return int(masked[idx]), idx


def _profile_chain(prov_log: list[np.ndarray], final_idx: int) -> list[int]:
    """Chosen profile per layer, walked back through the predecessor log."""
    T = len(prov_log)
    chain = [0] * (T + 1)
    chain[T] = final_idx
    for i in range(T, 1, -1):
        chain[i - 1] = int(prov_log[i - 1][chain[i]])
    return chain


def _decode_profile(idx: int, m: int, R: int, ell: int) -> list[tuple[int, int]]:
    out = []
    for j in range(m):
        s = (idx // R ** (m - 1 - j)) % R
        out.append(_decode_state(s, ell))
    return out


def _witness_from_chain(
    g: TemporalGraph,
    k: int,
    ell: int,
    bags: list[tuple[int, ...]],
    chain: list[int],
    domination: bool,
) -> Timeline:
    """Replay the profile chain into concrete intervals.

    Interval starts appear as pos = 1 inside bags; entering vertices carry
    already-running intervals (pos >= 2) and, for domination, committed
    self-domination intervals before entry / after exit per the counted
    enter/leave summands.
    """
    R = _radix(k, ell)
    T = g.T
    out: set[ActivityInterval] = set()
    prev_states: dict[int, tuple[int, int]] = {}
    prev_bag: tuple[int, ...] = ()
    for i in range(1, T + 1):
        bag = bags[i - 1]
        states = dict(zip(bag, _decode_profile(chain[i], len(bag), R, ell)))
        for v, (c, p) in states.items():
            if p == 1:
                out.add(ActivityInterval(v, i, min(i + ell, T)))
            if v not in prev_states and p >= 2:
                a = i - p + 1
                out.add(ActivityInterval(v, a, min(a + ell, T)))
        if domination:
            for v, (c, p) in states.items():
                if v in prev_states:
                    continue
                c_past = c - (1 if p >= 1 else 0)
                anchor = i - p + 1 if p >= 1 else i
                e = anchor - 1
                placed = 0
                while placed < c_past and e >= 1:
                    out.add(ActivityInterval(v, max(1, e - ell), e))
                    e -= ell + 1
                    placed += 1
            for v in prev_bag:
                if v in states:
                    continue
                c_old, p_old = prev_states[v]
                if p_old == 0:
                    start = i
                else:
                    a = i - p_old
                    start = min(a + ell, T) + 1
                placed = 0
                while placed < k - c_old and start <= T:
                    out.add(ActivityInterval(v, start, min(start + ell, T)))
                    start += ell + 1
                    placed += 1
        prev_states = states
        prev_bag = bag
    return as_timeline(out)


# -------------------- raw dynamic programs --------------------


def _bags_of(g: TemporalGraph) -> list[tuple[int, ...]]:
    return [tuple(sorted(b)) for b in vertex_membership_sequence(g).bags]


def solve_pvc_dp(
    g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET
) -> DpResult:
    """Maximum coverable temporal edges, by the bag-profile DP.

    Assumes the few-bags preprocessing ran: every vertex of the underlying
    graph sits in at least k*(ell+1)+1 bags (solve_pvc composes the two).
    """
    bags = _bags_of(g)
    plans = _pvc_plans(g, k, ell, bags)
    vals, prov = _run_layers(k, ell, plans, budget)
    opt, idx = _final_readoff(vals, bags[-1], k, ell, g.T)
    chain = _profile_chain(prov, idx)
    witness = _witness_from_chain(g, k, ell, bags, chain, domination=False)
    return DpResult(optimum=opt, witness=witness)


def solve_pds_dp(
    g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET
) -> DpResult:
    """Maximum dominatable temporal vertices among non-isolated vertices.

    Vertices isolated in the underlying graph contribute nothing here;
    apply the isolated-vertex rule first (solve_pds composes the two).
    """
    bags = _bags_of(g)
    plans = _pds_plans(g, k, ell, bags, bags)
    vals, prov = _run_layers(k, ell, plans, budget)
    opt, idx = _final_readoff(vals, bags[-1], k, ell, g.T)
    chain = _profile_chain(prov, idx)
    witness = _witness_from_chain(g, k, ell, bags, chain, domination=True)
    return DpResult(optimum=opt, witness=witness)


# -------------------- preprocessing --------------------


def _graph_preprocess_pvc(g: TemporalGraph, k: int, ell: int) -> tuple[TemporalGraph, ReductionLedger]:
    """Remove isolated vertices and vertices alive in at most k*(ell+1) bags.

    A removed short-lived vertex gets greedy intervals tiling its whole
    lifetime, which covers every temporal edge incident to it; each such
    edge is credited once and deleted. Deletion can shorten other
    lifetimes, so this iterates to a fixpoint. When T <= k*(ell+1) every
    vertex is short-lived and the whole instance is consumed here.
    """
    snaps = [set(es) for es in g.snapshots]
    ledger = ReductionLedger()
    forced: list[ActivityInterval] = []
    credited: set[tuple[tuple[int, int], int]] = set()
    changed = True
    while changed:
        changed = False
        first: dict[int, int] = {}
        last: dict[int, int] = {}
        for i, es in enumerate(snaps, start=1):
            for u, v in es:
                for w in (u, v):
                    first.setdefault(w, i)
                    last[w] = i
        for v in range(1, g.n + 1):
            if v in ledger.removed_vertices:
                continue
            if v not in first:
                ledger.removed_vertices[v] = "isolated"
                changed = True
                continue
            span = last[v] - first[v] + 1
            if span <= k * (ell + 1):
                forced.extend(tile_interval(v, first[v], last[v], ell, g.T))
                for i in range(first[v], last[v] + 1):
                    for e in [e for e in snaps[i - 1] if v in e]:
                        credited.add((e, i))
                        snaps[i - 1].discard(e)
                ledger.removed_vertices[v] = "few-bags"
                changed = True
    ledger.credit = len(credited)
    ledger.forced_intervals = as_timeline(forced)
    g2 = TemporalGraph(g.n, tuple(frozenset(es) for es in snaps))
    return g2, ledger


def preprocess_pvc(
    g: TemporalGraph, k: int, ell: int, t: int
) -> tuple[ProblemInstance, ReductionLedger]:
    g2, ledger = _graph_preprocess_pvc(g, k, ell)
    return ProblemInstance(g2, ProblemKind.PVC, k, ell, max(t - ledger.credit, 0)), ledger


def _graph_reduce_large_bags_pvc(
    g: TemporalGraph, k: int, ell: int
) -> tuple[TemporalGraph, ReductionLedger]:
    """Remove vertices alive only inside a maximal run of large bags.

    Large = the k*(ell+1) biggest bags. Such a vertex's lifetime fits in
    the run, so greedy tiling covers all its incident temporal edges; the
    surviving portion of each former large bag is contained in the two
    small bags flanking the run.
    """
    seq = vertex_membership_sequence(g)
    sizes = seq.sizes()
    large = largest_bag_indices(sizes, k * (ell + 1))
    ledger = ReductionLedger()
    snaps = [set(es) for es in g.snapshots]
    forced: list[ActivityInterval] = []
    credited: set[tuple[tuple[int, int], int]] = set()
    runs = _index_runs(large, g.T)
    life = g.lifetimes()
    for lo, hi in runs:
        inside: set[int] = set()
        for x in range(lo, hi + 1):
            inside |= seq.bags[x - 1]
        flank: set[int] = set()
        if lo >= 2:
            flank |= seq.bags[lo - 2]
        if hi + 1 <= g.T:
            flank |= seq.bags[hi]
        for v in sorted(inside - flank):
            a, b = life[v]
            forced.extend(tile_interval(v, a, b, ell, g.T))
            for i in range(a, b + 1):
                for e in [e for e in snaps[i - 1] if v in e]:
                    credited.add((e, i))
                    snaps[i - 1].discard(e)
            ledger.removed_vertices[v] = "large-run"
    ledger.credit = len(credited)
    ledger.forced_intervals = as_timeline(forced)
    g2 = TemporalGraph(g.n, tuple(frozenset(es) for es in snaps))
    return g2, ledger


def reduce_large_bags_pvc(
    g: TemporalGraph, k: int, ell: int, t: int
) -> tuple[ProblemInstance, ReductionLedger]:
    g2, ledger = _graph_reduce_large_bags_pvc(g, k, ell)
    return ProblemInstance(g2, ProblemKind.PVC, k, ell, max(t - ledger.credit, 0)), ledger


def _index_runs(indices: set[int], T: int) -> list[tuple[int, int]]:
    """Maximal runs [lo, hi] (1-based steps) of a 0-based index set."""
    runs = []
    x = 1
    while x <= T:
        if (x - 1) in indices:
            lo = x
            while x <= T and (x - 1) in indices:
                x += 1
            runs.append((lo, x - 1))
        else:
            x += 1
    return runs


def preprocess_pds(
    g: TemporalGraph, k: int, ell: int, t: int
) -> tuple[ProblemInstance, ReductionLedger]:
    """Isolated-vertex rule: credit min(T, k*(ell+1)) self-dominated steps each.

    min(T, .) rather than the plain product: a vertex cannot self-dominate
    more steps than exist. The graph itself is unchanged (the vertices have
    no edges); the DP simply never sees them.
    """
    ledger = ReductionLedger()
    forced: list[ActivityInterval] = []
    for v in sorted(isolated_vertices(g)):
        ledger.removed_vertices[v] = "isolated"
        ledger.credit += min(g.T, k * (ell + 1))
        forced.extend(tile_interval(v, 1, min(g.T, k * (ell + 1)), ell, g.T))
    ledger.forced_intervals = as_timeline(forced)
    return ProblemInstance(g, ProblemKind.PDS, k, ell, max(t - ledger.credit, 0)), ledger


# -------------------- solve pipelines --------------------


def solve_pvc(g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET) -> DpResult:
    """Few-bags preprocessing, then the DP; optimum over the whole instance."""
    g2, ledger = _graph_preprocess_pvc(g, k, ell)
    res = solve_pvc_dp(g2, k, ell, budget)
    witness = as_timeline(set(ledger.forced_intervals) | set(res.witness))
    return DpResult(optimum=res.optimum + ledger.credit, witness=witness)


def solve_pvc_vimwx(g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET) -> DpResult:
    """Pipeline with the large-bag reduction between two preprocessing passes."""
    g1, led1 = _graph_preprocess_pvc(g, k, ell)
    g2, led2 = _graph_reduce_large_bags_pvc(g1, k, ell)
    g3, led3 = _graph_preprocess_pvc(g2, k, ell)
    res = solve_pvc_dp(g3, k, ell, budget)
    credit = led1.credit + led2.credit + led3.credit
    witness = as_timeline(
        set(led1.forced_intervals)
        | set(led2.forced_intervals)
        | set(led3.forced_intervals)
        | set(res.witness)
    )
    return DpResult(optimum=res.optimum + credit, witness=witness)


def solve_pds(g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET) -> DpResult:
    """Trivial all-tiling when T <= k*(ell+1); else isolated rule + DP."""
    if g.T <= k * (ell + 1):
        return DpResult(optimum=g.n * g.T, witness=full_tiling(g, k, ell))
    _, ledger = preprocess_pds(g, k, ell, 0)
    res = solve_pds_dp(g, k, ell, budget)
    witness = as_timeline(set(ledger.forced_intervals) | set(res.witness))
    return DpResult(optimum=res.optimum + ledger.credit, witness=witness)


def _min_cover_count(steps: list[int], ell: int) -> int:
    """Fewest length-ell intervals whose union contains every listed step."""
    count = 0
    covered_to = 0
    for s in steps:
        if s > covered_to:
            count += 1
            covered_to = s + ell
    return count


def _dominant_cover(
    v: int, iso_steps: list[int], run: tuple[int, int], ell: int, T: int, k: int
) -> list[ActivityInterval] | None:
    """The activity-maximal k-interval cover of a run vertex's isolated steps.

    None when even the minimum cover needs more than k intervals. Otherwise:
    prefix steps tiled left-aligned (maximal spill into the run), suffix
    steps tiled right-aligned (no clipping waste at T, maximal spill), and
    one extra whole-run interval when spills miss an isolated step inside
    the run. Any feasible cover's activity is a subset of this one's, so
    committing it preserves all solutions.
    """
    if _min_cover_count(iso_steps, ell) > k:
        return None
    lo, hi = run
    out = []
    a = 1
    while a <= lo - 1:
        out.append(ActivityInterval(v, a, min(a + ell, T)))
        a += ell + 1
    if hi < T:
        cnt_s = -(-(T - hi) // (ell + 1))
        for r in range(cnt_s):
            b = T - r * (ell + 1)
            out.append(ActivityInterval(v, max(1, b - ell), b))
    active = {x for _, a2, b2 in out for x in range(a2, b2 + 1)}
    if any(s not in active for s in iso_steps):
        out.append(ActivityInterval(v, lo, min(lo + ell, T)))
        active.update(range(lo, min(lo + ell, T) + 1))
    assert len(out) <= k and all(s in active for s in iso_steps)
    return sorted(out)


def solve_ds_vimw_x(
    g: TemporalGraph, k: int, ell: int, budget: int = DEFAULT_DP_BUDGET
) -> tuple[bool, Timeline | None]:
    """Full-domination decision via the large-bag preprocessing.

    Large = the ell+1 biggest bags. Vertices alive only inside one run of
    large bags must spend their whole interval budget self-dominating the
    steps where they are isolated; the activity-maximal such cover is
    committed up front, and the DP runs on the bag remainders with the
    committed activity folded into the per-step counting.
    """
    T, n = g.T, g.n
    if T <= k * (ell + 1):
        return True, full_tiling(g, k, ell)
    if isolated_vertices(g):
        # Such a vertex would need to self-dominate more steps than its
        # budget covers.
        return False, None

    seq = vertex_membership_sequence(g)
    sizes = seq.sizes()
    large = largest_bag_indices(sizes, ell + 1)
    runs = _index_runs(large, T)
    life = g.lifetimes()

    run_of: dict[int, tuple[int, int]] = {}
    a_of_run: dict[tuple[int, int], set[int]] = {}
    for lo, hi in runs:
        inside: set[int] = set()
        for x in range(lo, hi + 1):
            inside |= seq.bags[x - 1]
        flank: set[int] = set()
        if lo >= 2:
            flank |= seq.bags[lo - 2]
        if hi + 1 <= T:
            flank |= seq.bags[hi]
        members = inside - flank
        a_of_run[(lo, hi)] = members
        for v in members:
            run_of[v] = (lo, hi)

    committed_all = set(run_of)
    if not committed_all:
        res = solve_pds(g, k, ell, budget)
        ok = res.optimum == n * T
        return ok, (res.witness if ok else None)

    if T >= k * (ell + 1) + (ell + 1) + 1:
        return False, None

    forced: list[ActivityInterval] = []
    active_steps: dict[int, set[int]] = {}
    degree_steps: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for i in range(1, T + 1):
        for u, v in g.snapshots[i - 1]:
            degree_steps[u].add(i)
            degree_steps[v].add(i)
    for v in sorted(committed_all):
        iso_steps = [i for i in range(1, T + 1) if i not in degree_steps[v]]
        cover = _dominant_cover(v, iso_steps, run_of[v], ell, T, k)
        if cover is None:
            return False, None
        forced.extend(cover)
        act: set[int] = set()
        for _, a, b in cover:
            act.update(range(a, b + 1))
        active_steps[v] = act

    dp_bags = [tuple(sorted(seq.bags[i - 1] - committed_all)) for i in range(1, T + 1)]
    universe_bags = [tuple(sorted(seq.bags[i - 1])) for i in range(1, T + 1)]
    # Committed activity enters the per-step counting only while the vertex
    # is in the bag universe; all its other steps are isolated, covered by
    # the sweep, and credited below as settled self-domination.
    base_active: list[set[int]] = [set() for _ in range(T)]
    required: list[set[int]] = [set() for _ in range(T)]
    for members in a_of_run.values():
        for v in members:
            first_v, last_v = life[v]
            for x in range(first_v, last_v + 1):
                if x in active_steps[v]:
                    base_active[x - 1].add(v)
                else:
                    required[x - 1].add(v)

    plans = _pds_plans(g, k, ell, dp_bags, universe_bags, base_active, required)
    vals, prov = _run_layers(k, ell, plans, budget)
    opt, idx = _final_readoff(vals, dp_bags[-1], k, ell, T)
    if opt < 0:
        return False, None

    credit = sum(T - (life[v][1] - life[v][0] + 1) for v in committed_all)
    ok = opt + credit == n * T
    if not ok:
        return False, None
    chain = _profile_chain(prov, idx)
    dp_witness = _witness_from_chain(g, k, ell, dp_bags, chain, domination=True)
    return True, as_timeline(set(forced) | set(dp_witness))
