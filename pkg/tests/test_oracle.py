import pytest

from timelinecover.core import (
    BudgetExceeded,
    TemporalGraph,
    covered_temporal_edges,
    dominated_temporal_vertices,
    verify,
)
from timelinecover.oracle import oracle_solve, search_space_size
from timelinecover.generators import demo_instance, gen_random

from conftest import all_unrestricted_timelines, instance


def test_all_active_reaches_everything():
    g = gen_random(3, 4, 0.6, 1)
    vc = instance(g, "VC", 1, g.T - 1)
    assert oracle_solve(vc).optimum == g.total_temporal_edges()
    ds = instance(g, "DS", 1, g.T - 1)
    assert oracle_solve(ds).optimum == g.n * g.T


def test_single_vertex_self_domination():
    g = TemporalGraph.from_edge_lists(1, [[], [], []])
    res = oracle_solve(instance(g, "DS", 1, 0))
    assert res.optimum == 1 and not res.decision


def test_budget_guard():
    g = gen_random(6, 10, 0.5, 0)
    with pytest.raises(BudgetExceeded):
        oracle_solve(instance(g, "VC", 3, 1), budget=10**3)
    assert search_space_size(2, 3, 1) == 4**2


def test_witness_round_trip():
    for seed in range(40):
        g = gen_random(1 + seed % 4, 1 + seed % 5, 0.5, seed)
        for kind, counter in (
            ("PVC", covered_temporal_edges),
            ("PDS", dominated_temporal_vertices),
        ):
            res = oracle_solve(instance(g, kind, 1 + seed % 2, seed % 3, t=0))
            count, _ = counter(g, res.witness)
            assert count == res.optimum
            rep = verify(instance(g, kind, 1 + seed % 2, seed % 3, t=res.optimum), res.witness)
            assert rep.satisfies_instance


def test_monotone_in_k_and_ell():
    for seed in range(25):
        g = gen_random(3, 4, 0.5, seed + 100)
        for kind in ("PVC", "PDS"):
            base = oracle_solve(instance(g, kind, 1, 0, t=0)).optimum
            more_k = oracle_solve(instance(g, kind, 2, 0, t=0)).optimum
            more_ell = oracle_solve(instance(g, kind, 1, 1, t=0)).optimum
            assert more_k >= base and more_ell >= base


def test_canonical_completeness_against_unrestricted():
    # On tiny instances the canonical start-set enumeration must match a
    # fully unrestricted enumeration over all short-interval timelines.
    for seed in range(12):
        g = gen_random(1 + seed % 3, 1 + seed % 3, 0.6, seed + 7)
        for kind, counter in (
            ("PVC", covered_temporal_edges),
            ("PDS", dominated_temporal_vertices),
        ):
            for k, ell in ((1, 0), (1, 1), (2, 1)):
                res = oracle_solve(instance(g, kind, k, ell, t=0))
                brute = max(
                    counter(g, tl)[0] for tl in all_unrestricted_timelines(g, k, ell)
                )
                assert res.optimum == brute


def test_prune_does_not_change_result():
    for seed in range(15):
        g = gen_random(3, 3, 0.5, seed + 200)
        inst = instance(g, "PDS", 1, 1, t=0)
        assert oracle_solve(inst, prune=True).optimum == oracle_solve(inst, prune=False).optimum


def test_demo_ds_decision_is_exhaustively_no():
    # Frozen result of the full enumeration (<= 22^5 canonical timelines):
    # at most 28 of the 30 temporal vertices are dominatable with two
    # length-0 intervals per vertex.
    res = oracle_solve(instance(demo_instance(), "DS", 2, 0))
    assert res.optimum == 28
    assert not res.decision
