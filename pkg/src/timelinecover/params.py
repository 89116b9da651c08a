"""Membership sequences over time and the derived width parameters.

The vertex flavor puts v into bag F_i whenever v has a non-isolated
appearance both at or before and at or after step i; the edge flavor does
the same per underlying edge. Both kinds of per-element index sets are
therefore contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Edge, TemporalGraph, underlying_graph


@dataclass(frozen=True)
class MembershipSequence:
    flavor: str  # "vertex" or "edge"
    bags: tuple[frozenset, ...]

    def sizes(self) -> list[int]:
        return [len(b) for b in self.bags]


def _interval_sweep(spans: dict, T: int) -> tuple[frozenset, ...]:
    """Bags from per-element [lo, hi] membership intervals, by an event sweep."""
    add: list[list] = [[] for _ in range(T + 2)]
    remove: list[list] = [[] for _ in range(T + 2)]
    for x, (lo, hi) in spans.items():
        add[lo].append(x)
        remove[hi + 1].append(x)
    current: set = set()
    bags = []
    for i in range(1, T + 1):
        current.update(add[i])
        current.difference_update(remove[i])
        bags.append(frozenset(current))
    return tuple(bags)


def vertex_membership_sequence(g: TemporalGraph) -> MembershipSequence:
    """Bag F_i = vertices whose first/last non-isolated steps bracket i."""
    return MembershipSequence("vertex", _interval_sweep(g.lifetimes(), g.T))


def edge_membership_sequence(g: TemporalGraph) -> MembershipSequence:
    """Bag F_i = underlying edges appearing both at or before and at or after i."""
    first: dict[Edge, int] = {}
    last: dict[Edge, int] = {}
    for i in range(1, g.T + 1):
        for e in g.snapshots[i - 1]:
            first.setdefault(e, i)
            last[e] = i
    spans = {e: (first[e], last[e]) for e in first}
    return MembershipSequence("edge", _interval_sweep(spans, g.T))


def vimw(g: TemporalGraph) -> int:
    return max(vertex_membership_sequence(g).sizes())


def imw(g: TemporalGraph) -> int:
    return max(edge_membership_sequence(g).sizes())


def vimw_x(g: TemporalGraph, x: int) -> int:
    """Size of the x-th largest vertex bag; 0 for ranks beyond T."""
    if x < 1:
        raise ValueError("rank x must be >= 1")
    sizes = sorted(vertex_membership_sequence(g).sizes(), reverse=True)
    if x > len(sizes):
        return 0
    return sizes[x - 1]


def max_snapshot_edges(g: TemporalGraph) -> int:
    """q: the maximal number of edges in any single snapshot."""
    return max(len(es) for es in g.snapshots)


def largest_bag_indices(sizes: Sequence[int], count: int) -> set[int]:
    """0-based indices of the `count` largest bags, earlier steps first on ties.

    The tie rule only affects which bags downstream preprocessing labels
    large; the bag-size values themselves are order-independent.
    """
    if count <= 0:
        return set()
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    return set(order[:count])


def isolated_vertices(g: TemporalGraph) -> set[int]:
    """Vertices isolated in the underlying graph (in no bag at all)."""
    non_isolated = {v for e in underlying_graph(g).edges for v in e}
    return set(range(1, g.n + 1)) - non_isolated
