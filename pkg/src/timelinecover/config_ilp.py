"""Configuration integer program for the length-0 partial problems.

Snapshots collapse into classes by edge set. One variable X_E^S per class E
and vertex subset S counts how many of the class's snapshots run with
exactly S active. With ell = 0 an interval is one snapshot, so per-vertex
budgets become linear constraints and feasibility is decided exactly by a
bounded depth-first search over the compositions of each class
multiplicity; no general-purpose ILP solver is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ActivityInterval,
    BudgetExceeded,
    Edge,
    GuardExceeded,
    ProblemKind,
    TemporalGraph,
    Timeline,
    as_timeline,
)

DEFAULT_SUBSET_GUARD = 12
DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class ConfigProgram:
    n: int
    kind: ProblemKind
    k: int
    target: int
    classes: tuple[frozenset[Edge], ...]  # in order of first appearance
    alpha: tuple[int, ...]  # snapshot multiplicity per class
    class_snapshots: tuple[tuple[int, ...], ...]  # 1-based steps per class, ascending
    values: tuple[tuple[int, ...], ...]  # values[c][S-bitmask]

    @property
    def num_vars(self) -> int:
        return len(self.classes) * (1 << self.n)


def _subset_value(n: int, edges: frozenset[Edge], mask: int, domination: bool) -> int:
    if domination:
        hit = set()
        for v in range(1, n + 1):
            if mask >> (v - 1) & 1:
                hit.add(v)
        for u, v in edges:
            if mask >> (u - 1) & 1:
                hit.add(v)
            if mask >> (v - 1) & 1:
                hit.add(u)
        return len(hit)
    return sum(1 for u, v in edges if (mask >> (u - 1) & 1) or (mask >> (v - 1) & 1))


def build_config_program(
    g: TemporalGraph,
    k: int,
    t: int,
    kind: ProblemKind,
    subset_guard: int = DEFAULT_SUBSET_GUARD,
) -> ConfigProgram:
    """Deduplicate snapshots into classes and tabulate every subset's yield.

    Only for ell = 0 semantics; refuses when 2^n subsets would not be
    materializable (n > subset_guard).
    """
    if g.n > subset_guard:
        raise GuardExceeded(f"2^{g.n} subsets exceed the guard of 2^{subset_guard}")
    order: list[frozenset[Edge]] = []
    snaps: dict[frozenset[Edge], list[int]] = {}
    for i in range(1, g.T + 1):
        es = g.snapshots[i - 1]
        if es not in snaps:
            order.append(es)
            snaps[es] = []
        snaps[es].append(i)
    domination = kind.is_domination
    values = tuple(
        tuple(_subset_value(g.n, es, mask, domination) for mask in range(1 << g.n))
        for es in order
    )
    return ConfigProgram(
        n=g.n,
        kind=kind,
        k=k,
        target=t,
        classes=tuple(order),
        alpha=tuple(len(snaps[es]) for es in order),
        class_snapshots=tuple(tuple(snaps[es]) for es in order),
        values=values,
    )


def solve_config_exact(
    prog: ConfigProgram, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[bool, dict[tuple[int, int], int] | None, Timeline | None]:
    """Exact feasibility via composition DFS with budget and value bounds.

    Returns (feasible, assignment, timeline); the assignment maps
    (class index, subset mask) to X_E^S. On success the timeline activates,
    within each class, the chosen subsets in ascending-mask order over the
    class's snapshots in time order.
    """
    n, k, t = prog.n, prog.k, prog.target
    nclasses = len(prog.classes)
    size = 1 << n

    # Rich subsets first inside each class so the value bound bites early.
    mask_order = [
        sorted(range(size), key=lambda m, c=c: (-prog.values[c][m], m))
        for c in range(nclasses)
    ]
    # sufmax[c][pos]: best value still available at or after position pos.
    sufmax = []
    for c in range(nclasses):
        arr = [0] * (size + 1)
        for pos in range(size - 1, -1, -1):
            arr[pos] = max(arr[pos + 1], prog.values[c][mask_order[c][pos]])
        sufmax.append(arr)
    suffix_best = [0] * (nclasses + 1)
    for c in range(nclasses - 1, -1, -1):
        suffix_best[c] = suffix_best[c + 1] + prog.alpha[c] * sufmax[c][0]

    budgets = [k] * (n + 1)  # 1-based per-vertex interval budgets
    assignment: dict[tuple[int, int], int] = {}
    nodes = 0

    def mask_vertices(mask: int):
        v = 1
        while mask:
            if mask & 1:
                yield v
            mask >>= 1
            v += 1

    def dfs(c: int, rem: int, pos: int, acc: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"composition search exceeded {node_budget} nodes")
        if acc >= t:
            return True
        if c == nclasses:
            return False
        if rem == 0:
            return dfs(c + 1, prog.alpha[c + 1] if c + 1 < nclasses else 0, 0, acc)
        if acc + rem * sufmax[c][pos] + suffix_best[c + 1] < t:
            return False
        if pos == size:
            return False
        mask = mask_order[c][pos]
        cap = rem
        for v in mask_vertices(mask):
            cap = min(cap, budgets[v])
            if cap == 0:
                break
        for count in range(cap, -1, -1):
            if count:
                for v in mask_vertices(mask):
                    budgets[v] -= count
                assignment[(c, mask)] = count
            if dfs(c, rem - count, pos + 1, acc + count * prog.values[c][mask]):
                return True
            if count:
                del assignment[(c, mask)]
                for v in mask_vertices(mask):
                    budgets[v] += count
        return False

    start_rem = prog.alpha[0] if nclasses else 0
    feasible = dfs(0, start_rem, 0, 0) if nclasses else t <= 0
    if not feasible:
        return False, None, None

    # Unplaced snapshots run with nobody active.
    for c in range(nclasses):
        placed = sum(cnt for (cc, _), cnt in assignment.items() if cc == c)
        if placed < prog.alpha[c]:
            assignment[(c, 0)] = assignment.get((c, 0), 0) + prog.alpha[c] - placed
    timeline = _timeline_from_assignment(prog, assignment)
    return True, dict(assignment), timeline


def _timeline_from_assignment(
    prog: ConfigProgram, assignment: dict[tuple[int, int], int]
) -> Timeline:
    """Fixed subset order (ascending mask), consecutive snapshots per class."""
    intervals: list[ActivityInterval] = []
    for c in range(len(prog.classes)):
        steps = list(prog.class_snapshots[c])
        ptr = 0
        for mask in sorted(m for (cc, m) in assignment if cc == c):
            count = assignment[(c, mask)]
            for _ in range(count):
                step = steps[ptr]
                ptr += 1
                for v in range(1, prog.n + 1):
                    if mask >> (v - 1) & 1:
                        intervals.append(ActivityInterval(v, step, step))
    return as_timeline(intervals)


def export_lp(prog: ConfigProgram) -> str:
    """Program in LP text format; variables X_<class>_<subset bitmask>."""
    lines = [
        f"\\ configuration program: kind={prog.kind.value} n={prog.n} "
        f"k={prog.k} target={prog.target}",
        "Maximize",
    ]
    obj_terms = []
    for c in range(len(prog.classes)):
        for mask in range(1 << prog.n):
            val = prog.values[c][mask]
            if val:
                obj_terms.append(f"{val} X_{c}_{mask}")
    lines.append(" obj: " + (" + ".join(obj_terms) if obj_terms else "0"))
    lines.append("Subject To")
    if obj_terms:
        lines.append(" target: " + " + ".join(obj_terms) + f" >= {prog.target}")
    for c in range(len(prog.classes)):
        terms = [f"X_{c}_{mask}" for mask in range(1 << prog.n)]
        lines.append(f" class_{c}: " + " + ".join(terms) + f" = {prog.alpha[c]}")
    for v in range(1, prog.n + 1):
        terms = [
            f"X_{c}_{mask}"
            for c in range(len(prog.classes))
            for mask in range(1 << prog.n)
            if mask >> (v - 1) & 1
        ]
        if terms:
            lines.append(f" budget_{v}: " + " + ".join(terms) + f" <= {prog.k}")
    lines.append("Bounds")
    for c in range(len(prog.classes)):
        for mask in range(1 << prog.n):
            lines.append(f" X_{c}_{mask} >= 0")
    lines.append("General")
    names = [
        f"X_{c}_{mask}" for c in range(len(prog.classes)) for mask in range(1 << prog.n)
    ]
    if names:
        lines.append(" " + " ".join(names))
    lines.append("End")
    return "\n".join(lines) + "\n"
