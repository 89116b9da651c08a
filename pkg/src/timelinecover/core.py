"""Temporal graphs, activity timelines, and the certificate verifier.

Vertices are 1-indexed, matching the 1-based time steps. An activity
interval (v, a, b) makes v active at every step a..b; its length is b - a,
so an interval confined to a single snapshot has length 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

Edge = tuple[int, int]


class BudgetExceeded(Exception):
    """A solver refused an input whose search space exceeds the configured budget."""


class GuardExceeded(Exception):
    """An operation refused an input that would materialize too large an object."""


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TemporalGraph:
    """A fixed vertex set 1..n observed over T snapshots.

    ``snapshots[i-1]`` is the edge set of step i; every edge is a normalized
    pair (u, v) with u < v.
    """

    n: int
    snapshots: tuple[frozenset[Edge], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if len(self.snapshots) < 1:
            raise ValueError("need at least one snapshot")
        for i, edges in enumerate(self.snapshots, start=1):
            for u, v in edges:
                if not (1 <= u < v <= self.n):
                    raise ValueError(f"snapshot {i}: bad edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edge_lists(cls, n: int, edge_lists: Iterable[Iterable[tuple[int, int]]]) -> "TemporalGraph":
        """Normalize raw (u, v) pairs, rejecting self-loops and duplicates."""
        snaps = []
        for i, edges in enumerate(edge_lists, start=1):
            seen: set[Edge] = set()
            for u, v in edges:
                if u == v:
                    raise ValueError(f"snapshot {i}: self-loop at vertex {u}")
                e = norm_edge(u, v)
                if e in seen:
                    raise ValueError(f"snapshot {i}: duplicate edge {e}")
                seen.add(e)
            snaps.append(frozenset(seen))
        return cls(n, tuple(snaps))

    @property
    def T(self) -> int:
        return len(self.snapshots)

    def edges_at(self, i: int) -> frozenset[Edge]:
        """Edge set of step i (1-based)."""
        if not 1 <= i <= self.T:
            raise ValueError(f"time step {i} outside [1, {self.T}]")
        return self.snapshots[i - 1]

    def temporal_edges(self) -> Iterator[tuple[Edge, int]]:
        for i in range(1, self.T + 1):
            for e in sorted(self.snapshots[i - 1]):
                yield (e, i)

    def total_temporal_edges(self) -> int:
        return sum(len(es) for es in self.snapshots)

    def adjacency_at(self, i: int) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for u, v in self.edges_at(i):
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    def lifetimes(self) -> dict[int, tuple[int, int]]:
        """First and last step at which each vertex is non-isolated.

        Vertices isolated in every snapshot are absent from the result.
        """
        first: dict[int, int] = {}
        last: dict[int, int] = {}
        for i in range(1, self.T + 1):
            for u, v in self.snapshots[i - 1]:
                for w in (u, v):
                    first.setdefault(w, i)
                    last[w] = i
        return {v: (first[v], last[v]) for v in first}


@dataclass(frozen=True)
class StaticGraph:
    """A simple, loop-free static graph on vertices 1..n."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def max_degree(self) -> int:
        if not self.edges:
            return 0
        return max(len(nb) for nb in self.adjacency().values())


class ActivityInterval(NamedTuple):
    v: int
    a: int
    b: int


Timeline = tuple[ActivityInterval, ...]


def as_timeline(intervals: Iterable[tuple[int, int, int]]) -> Timeline:
    """Canonical (sorted) timeline from raw triples; duplicates are kept."""
    return tuple(sorted(ActivityInterval(*iv) for iv in intervals))


class ProblemKind(Enum):
    VC = "VC"
    PVC = "PVC"
    DS = "DS"
    PDS = "PDS"

    @property
    def is_partial(self) -> bool:
        return self in (ProblemKind.PVC, ProblemKind.PDS)

    @property
    def is_domination(self) -> bool:
        return self in (ProblemKind.DS, ProblemKind.PDS)


@dataclass(frozen=True)
class ProblemInstance:
    """A decision instance: does some k-activity ell-timeline reach the target?

    For the full problems (VC, DS) the target is implicit: all temporal
    edges, respectively all n*T temporal vertices. The partial problems
    carry an explicit threshold t.
    """

    graph: TemporalGraph
    kind: ProblemKind
    k: int
    ell: int
    t: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.ell < 0:
            raise ValueError("ell must be >= 0")
        if self.kind.is_partial:
            if self.t is None or self.t < 0:
                raise ValueError(f"{self.kind.value} needs a target t >= 0")
        elif self.t is not None:
            raise ValueError(f"{self.kind.value} has an implicit target; drop t")

    @property
    def target(self) -> int:
        if self.kind is ProblemKind.VC:
            return self.graph.total_temporal_edges()
        if self.kind is ProblemKind.DS:
            return self.graph.n * self.graph.T
        assert self.t is not None
        return self.t


@dataclass(frozen=True)
class VerificationReport:
    well_formed: bool
    k_respected: bool
    ell_respected: bool
    covered: int
    dominated: int
    satisfies_instance: bool


def underlying_graph(g: TemporalGraph) -> StaticGraph:
    """Union of all snapshot edge sets over the same vertex set."""
    edges: set[Edge] = set()
    for es in g.snapshots:
        edges |= es
    return StaticGraph(g.n, frozenset(edges))


def active_set(g: TemporalGraph, timeline: Iterable[tuple[int, int, int]], i: int) -> set[int]:
    """Vertices with an interval intersecting step i."""
    if not 1 <= i <= g.T:
        raise ValueError(f"time step {i} outside [1, {g.T}]")
    return {v for v, a, b in timeline if a <= i <= b}


def covered_temporal_edges(
    g: TemporalGraph, timeline: Iterable[tuple[int, int, int]]
) -> tuple[int, set[tuple[Edge, int]]]:
    """Temporal edges with at least one active endpoint."""
    tl = tuple(timeline)
    covered: set[tuple[Edge, int]] = set()
    for i in range(1, g.T + 1):
        act = active_set(g, tl, i)
        for e in g.snapshots[i - 1]:
            if e[0] in act or e[1] in act:
                covered.add((e, i))
    return len(covered), covered


def dominated_temporal_vertices(
    g: TemporalGraph, timeline: Iterable[tuple[int, int, int]]
) -> tuple[int, set[tuple[int, int]]]:
    """Temporal vertices inside the closed snapshot neighborhood of the active set."""
    tl = tuple(timeline)
    dominated: set[tuple[int, int]] = set()
    for i in range(1, g.T + 1):
        act = active_set(g, tl, i)
        hit = set(act)
        for u, v in g.snapshots[i - 1]:
            if u in act:
                hit.add(v)
            if v in act:
                hit.add(u)
        dominated.update((v, i) for v in hit)
    return len(dominated), dominated


def verify(inst: ProblemInstance, timeline: Iterable[tuple[int, int, int]]) -> VerificationReport:
    """Check a timeline against an instance; malformed input is reported, never raised.

    Duplicate intervals of one vertex are allowed and count toward the
    per-vertex cap k.
    """
    tl = tuple(ActivityInterval(*iv) for iv in timeline)
    g = inst.graph
    well_formed = all(1 <= v <= g.n and 1 <= a <= b <= g.T for v, a, b in tl)

    per_vertex: dict[int, int] = {}
    for v, _, _ in tl:
        per_vertex[v] = per_vertex.get(v, 0) + 1
    k_respected = all(c <= inst.k for c in per_vertex.values())
    ell_respected = all(b - a <= inst.ell for _, a, b in tl)

    if well_formed:
        covered, _ = covered_temporal_edges(g, tl)
        dominated, _ = dominated_temporal_vertices(g, tl)
    else:
        covered = dominated = 0

    relevant = dominated if inst.kind.is_domination else covered
    satisfies = well_formed and k_respected and ell_respected and relevant >= inst.target
    return VerificationReport(
        well_formed=well_formed,
        k_respected=k_respected,
        ell_respected=ell_respected,
        covered=covered,
        dominated=dominated,
        satisfies_instance=satisfies,
    )


def full_tiling(g: TemporalGraph, k: int, ell: int, vertices: Iterable[int] | None = None) -> Timeline:
    """Intervals tiling [1, T] for each vertex; valid whenever T <= k*(ell+1).

    Every listed vertex becomes active in every snapshot, which covers all
    temporal edges and dominates all its temporal vertices.
    """
    if vertices is None:
        vertices = range(1, g.n + 1)
    out = []
    for v in vertices:
        a = 1
        while a <= g.T:
            out.append(ActivityInterval(v, a, min(a + ell, g.T)))
            a += ell + 1
    return as_timeline(out)


def tile_interval(v: int, lo: int, hi: int, ell: int, T: int) -> list[ActivityInterval]:
    """Greedy full-length intervals covering every step in [lo, hi]."""
    out = []
    a = lo
    while a <= hi:
        out.append(ActivityInterval(v, a, min(a + ell, T)))
        a += ell + 1
    return out
