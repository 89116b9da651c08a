"""Exact solvers for timeline vertex cover and dominating set on temporal graphs."""

from .core import (
    ActivityInterval,
    BudgetExceeded,
    GuardExceeded,
    ProblemInstance,
    ProblemKind,
    StaticGraph,
    TemporalGraph,
    Timeline,
    VerificationReport,
    active_set,
    as_timeline,
    covered_temporal_edges,
    dominated_temporal_vertices,
    full_tiling,
    underlying_graph,
    verify,
)
from .params import (
    MembershipSequence,
    edge_membership_sequence,
    imw,
    max_snapshot_edges,
    vertex_membership_sequence,
    vimw,
    vimw_x,
)
from .oracle import OracleResult, oracle_solve
from .dp_vimw import (
    DpResult,
    ReductionLedger,
    preprocess_pds,
    preprocess_pvc,
    reduce_large_bags_pvc,
    solve_ds_vimw_x,
    solve_pds,
    solve_pds_dp,
    solve_pvc,
    solve_pvc_dp,
    solve_pvc_vimwx,
)
from .kernel import KernelOutcome, kernelize_ds
from .branching import solve_ds_branching, solve_vc_branching
from .config_ilp import ConfigProgram, build_config_program, export_lp, solve_config_exact
from .color_coding import ColoringTrialPlan, cc_dp, solve_partial_cc

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
