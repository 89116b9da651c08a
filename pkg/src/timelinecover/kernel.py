"""Linear-time kernel for full timeline domination in the parameter q + k + ell.

q is the maximal number of edges in a single snapshot. The case analysis
either answers outright or certifies that the instance is already small
(T <= 2qk(ell+1) snapshots, n <= 4qk(ell+1) vertices); the graph itself is
never rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TemporalGraph
from .params import max_snapshot_edges


@dataclass(frozen=True)
class KernelOutcome:
    """Either a direct answer (with its case label) or a smallness certificate."""

    answered: bool
    decision: bool | None
    reason: str
    # Set on the reduced arm; the instance is returned unchanged.
    graph: TemporalGraph | None = None

    @classmethod
    def answer(cls, decision: bool, reason: str) -> "KernelOutcome":
        return cls(answered=True, decision=decision, reason=reason)

    @classmethod
    def reduced(cls, g: TemporalGraph) -> "KernelOutcome":
        return cls(answered=False, decision=None, reason="reduced", graph=g)


def kernelize_ds(g: TemporalGraph, k: int, ell: int) -> KernelOutcome:
    """One linear scan computing n, q, T, then the case split.

    Case 2.1 rejects already at T > 2k(ell+1): a yes-instance with q < n/2
    needs more than n/2 active vertices per snapshot, and the total activity
    budget n*k*(ell+1) then forces T < 2k(ell+1). (Rejecting only above
    2k(ell+1)+1 would let q = 1 instances through with T exceeding the
    certified 2qk(ell+1) snapshot bound.)
    """
    n, T = g.n, g.T
    q = max_snapshot_edges(g)
    span = k * (ell + 1)

    if 2 * q >= n:  # Case 1
        if T > 2 * q * span:
            return KernelOutcome.answer(False, "case-1-no")
        return KernelOutcome.reduced(g)

    # Case 2: q < n/2.
    if T > 2 * span:
        return KernelOutcome.answer(False, "case-2.1-no")

    # Case 2.2: T <= 2k(ell+1).
    if n <= 4 * q * span:
        return KernelOutcome.reduced(g)
    # More vertices than can ever be non-isolated: some vertex is isolated
    # in every snapshot and must self-dominate all T steps.
    if T >= span + 1:
        return KernelOutcome.answer(False, "case-2.2-isolated-no")
    return KernelOutcome.answer(True, "case-2.2-isolated-yes")
