import pytest

from timelinecover.core import TemporalGraph
from timelinecover.params import (
    edge_membership_sequence,
    imw,
    largest_bag_indices,
    max_snapshot_edges,
    vertex_membership_sequence,
    vimw,
    vimw_x,
)
from timelinecover.generators import demo_instance, gen_random


def test_spanning_edge_bags():
    g = TemporalGraph.from_edge_lists(2, [[(1, 2)], [], [(1, 2)]])
    vseq = vertex_membership_sequence(g)
    assert vseq.bags == (frozenset({1, 2}),) * 3
    eseq = edge_membership_sequence(g)
    assert eseq.bags == (frozenset({(1, 2)}),) * 3
    assert vimw(g) == 2 and imw(g) == 1
    assert vimw_x(g, 4) == 0


def test_isolated_vertex_never_in_bags():
    g = TemporalGraph.from_edge_lists(3, [[(1, 2)]])
    assert vertex_membership_sequence(g).bags == (frozenset({1, 2}),)


def test_star_lifetime_family():
    # Star with two leaves; each leaf edge appears twice with a gap, so both
    # edges straddle every middle step while snapshots stay single-edge.
    g = TemporalGraph.from_edge_lists(
        3, [[(1, 2)], [(1, 3)], [(1, 2)], [(1, 3)]]
    )
    assert imw(g) == 2 == g.n - 1
    assert max_snapshot_edges(g) == 1


def test_one_shot_edges():
    g = TemporalGraph.from_edge_lists(3, [[(1, 2)], [(2, 3)], [(1, 3)]])
    assert imw(g) == 1


def test_empty_graph_widths():
    g = TemporalGraph.from_edge_lists(2, [[], []])
    assert vimw(g) == 0 and imw(g) == 0 and max_snapshot_edges(g) == 0


def test_demo_bags_match_lifetimes():
    g = demo_instance()
    life = g.lifetimes()
    seq = vertex_membership_sequence(g)
    for i in range(1, g.T + 1):
        expect = {v for v, (lo, hi) in life.items() if lo <= i <= hi}
        assert seq.bags[i - 1] == expect


def test_vimw_x_bad_rank():
    g = demo_instance()
    with pytest.raises(ValueError):
        vimw_x(g, 0)


def test_largest_bag_tiebreak_prefers_earlier():
    assert largest_bag_indices([2, 3, 3, 1], 2) == {1, 2}
    assert largest_bag_indices([2, 2, 2], 2) == {0, 1}
    assert largest_bag_indices([1], 0) == set()


def test_invariants_on_random_corpus():
    for seed in range(500):
        n = 1 + seed % 5
        T = 1 + (seed // 5) % 6
        g = gen_random(n, T, [0.2, 0.5, 0.8][seed % 3], seed)
        sizes = vertex_membership_sequence(g).sizes()
        ranked = [vimw_x(g, x) for x in range(1, g.T + 2)]
        assert ranked[0] == vimw(g)
        assert all(a >= b for a, b in zip(ranked, ranked[1:]))
        w, e = vimw(g), imw(g)
        assert e <= w * (w - 1) // 2
        assert max_snapshot_edges(g) <= e

        # membership contiguity, both flavors
        for seq in (vertex_membership_sequence(g), edge_membership_sequence(g)):
            elements = set().union(*seq.bags) if seq.bags else set()
            for x in elements:
                steps = [i for i, bag in enumerate(seq.bags) if x in bag]
                assert steps == list(range(steps[0], steps[-1] + 1))
