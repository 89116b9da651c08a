import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from timelinecover.core import (
    ActivityInterval,
    ProblemInstance,
    ProblemKind,
    TemporalGraph,
    active_set,
    covered_temporal_edges,
    dominated_temporal_vertices,
    full_tiling,
    underlying_graph,
    verify,
)
from timelinecover.generators import demo_cover_witness, demo_instance, gen_random

from conftest import instance


def test_underlying_graph_union():
    g = TemporalGraph.from_edge_lists(2, [[(1, 2)], [], [(1, 2)]])
    assert underlying_graph(g).edges == frozenset({(1, 2)})
    g = TemporalGraph.from_edge_lists(3, [[(1, 2)], [(2, 3)]])
    assert underlying_graph(g).edges == frozenset({(1, 2), (2, 3)})


def test_underlying_graph_demo_matches_direct_union():
    g = demo_instance()
    direct = set()
    for es in g.snapshots:
        direct |= es
    assert underlying_graph(g).edges == frozenset(direct)
    assert len(direct) == 10  # every pair of the five vertices appears


def test_validation_rejects_bad_input():
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(2, [[(1, 1)]])
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(2, [[(1, 2), (2, 1)]])
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(2, [[(1, 3)]])
    with pytest.raises(ValueError):
        TemporalGraph(0, (frozenset(),))
    with pytest.raises(ValueError):
        TemporalGraph(1, ())


def test_active_set():
    g = TemporalGraph.from_edge_lists(2, [[(1, 2)]] * 4)
    assert active_set(g, [(1, 2, 4)], 3) == {1}
    assert active_set(g, [(1, 2, 4)], 1) == set()
    assert active_set(g, [(1, 1, 2), (2, 2, 2)], 2) == {1, 2}
    with pytest.raises(ValueError):
        active_set(g, [], 5)


def test_covered_temporal_edges():
    g = demo_instance()
    assert covered_temporal_edges(g, [])[0] == 0
    count, covered = covered_temporal_edges(g, demo_cover_witness())
    assert count == 23 == g.total_temporal_edges()
    assert covered == set((e, i) for e, i in g.temporal_edges())


def test_dominated_star_center():
    g = TemporalGraph.from_edge_lists(4, [[(1, 2), (1, 3), (1, 4)]])
    count, dom = dominated_temporal_vertices(g, [(1, 1, 1)])
    assert count == 4 and dom == {(v, 1) for v in range(1, 5)}
    assert dominated_temporal_vertices(g, [])[0] == 0


def test_verify_flags():
    g = TemporalGraph.from_edge_lists(2, [[(1, 2)]] * 3)
    vc = instance(g, "VC", 1, 0)
    rep = verify(vc, [(1, 1, 1), (1, 2, 2)])  # two intervals on one vertex
    assert not rep.k_respected and not rep.satisfies_instance

    ds = instance(g, "DS", 1, 2)
    rep = verify(ds, full_tiling(g, 1, 2))
    assert rep.satisfies_instance and rep.dominated == g.n * g.T

    pvc = instance(g, "PVC", 2, 2, t=5)
    rep = verify(pvc, [(1, 1, 3)])
    assert rep.covered == 3 and not rep.satisfies_instance

    rep = verify(vc, [(1, 0, 1)])
    assert not rep.well_formed and not rep.satisfies_instance
    rep = verify(vc, [(9, 1, 1)])
    assert not rep.well_formed


def test_verify_is_pure_and_duplicates_count_toward_cap():
    g = TemporalGraph.from_edge_lists(2, [[(1, 2)]])
    vc = instance(g, "VC", 1, 0)
    tl = ((1, 1, 1), (1, 1, 1))
    first = verify(vc, tl)
    assert first == verify(vc, tl)
    assert not first.k_respected  # the duplicate costs a slot


@st.composite
def tiny_instances(draw):
    n = draw(st.integers(1, 4))
    T = draw(st.integers(1, 4))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.sampled_from([0.2, 0.5, 0.8]))
    return gen_random(n, T, p, seed)


@given(tiny_instances(), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_adding_interval_is_monotone(g, seed):
    import numpy as np

    rng = np.random.default_rng(seed)
    tl = []
    for _ in range(int(rng.integers(0, 4))):
        v = int(rng.integers(1, g.n + 1))
        a = int(rng.integers(1, g.T + 1))
        b = int(rng.integers(a, g.T + 1))
        tl.append((v, a, b))
    v = int(rng.integers(1, g.n + 1))
    a = int(rng.integers(1, g.T + 1))
    extra = (v, a, int(rng.integers(a, g.T + 1)))

    for counter in (covered_temporal_edges, dominated_temporal_vertices):
        before, _ = counter(g, tl)
        after, _ = counter(g, tl + [extra])
        assert after >= before
    for i in range(1, g.T + 1):
        assert active_set(g, tl, i) <= set(range(1, g.n + 1))


def test_problem_instance_validation():
    g = TemporalGraph.from_edge_lists(1, [[]])
    with pytest.raises(ValueError):
        ProblemInstance(g, ProblemKind.PVC, 1, 0)  # missing t
    with pytest.raises(ValueError):
        ProblemInstance(g, ProblemKind.VC, 1, 0, t=3)  # t on a full kind
    with pytest.raises(ValueError):
        ProblemInstance(g, ProblemKind.VC, 0, 0)
    assert instance(g, "DS", 1, 0).target == 1
