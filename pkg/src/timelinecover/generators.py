"""Instance factories: random temporal graphs and the hardness-style constructions.

Each construction documents its deterministic vertex and snapshot layout so
tests can address gadget pieces; the companion witness builders emit the
forward-direction certificates for sources that are solvable (a proper
3-coloring, a small dominating set, a satisfying assignment).
"""

from __future__ import annotations

import numpy as np

from .core import (
    ActivityInterval,
    Edge,
    ProblemInstance,
    ProblemKind,
    StaticGraph,
    TemporalGraph,
    Timeline,
    as_timeline,
    norm_edge,
)

# -------------------- random instances --------------------


def gen_random(n: int, T: int, p: float, seed: int) -> TemporalGraph:
    """Each potential edge appears in each snapshot independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(np.random.SeedSequence([seed]))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    snaps = []
    for _ in range(T):
        if pairs:
            draws = rng.random(len(pairs))
            snaps.append(frozenset(e for e, d in zip(pairs, draws) if d < p))
        else:
            snaps.append(frozenset())
    return TemporalGraph(n, tuple(snaps))


# -------------------- proper edge coloring --------------------


def vizing_edge_coloring(g: StaticGraph) -> list[set[Edge]]:
    """Proper edge coloring with at most max_degree + 1 colors (fan rotation).

    Misra-Gries: to color edge (x, y) build a maximal fan at x, invert the
    alternating path of the two candidate colors when they clash, then
    rotate a fan prefix. Returns the color classes F_1..F_{Delta+1}; every
    class is a matching.
    """
    delta = g.max_degree()
    ncolors = max(delta + 1, 1)
    color: dict[Edge, int] = {}
    used: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    colored_nbr: dict[int, dict[int, int]] = {v: {} for v in range(1, g.n + 1)}

    def first_free(v: int) -> int:
        for c in range(1, ncolors + 1):
            if c not in used[v]:
                return c
        raise AssertionError("no free color; degree bound violated")

    def unassign(u: int, w: int) -> None:
        e = norm_edge(u, w)
        c = color.pop(e)
        used[u].discard(c)
        used[w].discard(c)
        del colored_nbr[u][c]
        del colored_nbr[w][c]

    def assign(u: int, w: int, c: int) -> None:
        e = norm_edge(u, w)
        if e in color:
            unassign(u, w)
        color[e] = c
        used[u].add(c)
        used[w].add(c)
        colored_nbr[u][c] = w
        colored_nbr[w][c] = u

    for e in sorted(g.edges):
        x, y0 = e
        # Maximal fan at x from y0: each appended vertex's edge to x wears a
        # color that is free at the previous fan vertex.
        fan = [y0]
        in_fan = {y0}
        while True:
            tip = fan[-1]
            nxt = None
            for c in sorted(colored_nbr[x]):
                w = colored_nbr[x][c]
                if w not in in_fan and c not in used[tip]:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c_free = first_free(x)
        d_free = first_free(fan[-1])
        if d_free in used[x]:
            # Invert the maximal path from x whose edges alternate d, c.
            path = []
            prev, cur, want = x, colored_nbr[x][d_free], d_free
            path.append((x, cur, want))
            while True:
                want = c_free if want == d_free else d_free
                nxt = colored_nbr[cur].get(want)
                if nxt is None or nxt == prev:
                    break
                path.append((cur, nxt, want))
                prev, cur = cur, nxt
            for u, w, _ in path:
                unassign(u, w)
            for u, w, cc in path:
                assign(u, w, c_free if cc == d_free else d_free)
        # d is now free at x; rotate the shortest fan prefix that is still a
        # valid fan and whose tip misses d.
        j = None
        for i, f in enumerate(fan):
            if i > 0:
                c_i = color.get(norm_edge(x, f))
                if c_i is None or c_i in used[fan[i - 1]]:
                    break
            if d_free not in used[f]:
                j = i
                break
        assert j is not None, "fan rotation lost its pivot"
        # Uncolor the donors first: shifting in place would transiently put
        # one color on two edges at x and corrupt the bookkeeping.
        shift = [color[norm_edge(x, fan[i + 1])] for i in range(j)]
        for i in range(1, j + 1):
            unassign(x, fan[i])
        for i in range(j):
            assign(x, fan[i], shift[i])
        assign(x, fan[j], d_free)

    classes: list[set[Edge]] = [set() for _ in range(ncolors)]
    for e2, c in color.items():
        classes[c - 1].add(e2)
    return classes


# -------------------- 3-coloring -> full covering (T = 23) --------------------


def reduce_3col_to_tvc(g: StaticGraph) -> ProblemInstance:
    """Three identical 5-snapshot color blocks separated by 4 empty snapshots.

    Block j-th snapshot carries edge-color class F_j; a vertex avoids the
    block of its color. Layout: blocks at steps 1-5, 10-14, 19-23; k=2,
    ell=4.
    """
    classes = _five_classes(g)
    empty: list[frozenset[Edge]] = [frozenset()] * 4
    block = [frozenset(cls) for cls in classes]
    snaps = block + empty + block + empty + block
    return ProblemInstance(TemporalGraph(g.n, tuple(snaps)), ProblemKind.VC, k=2, ell=4)


TVC_BLOCKS = [(1, 5), (10, 14), (19, 23)]


def _five_classes(g: StaticGraph) -> list[set[Edge]]:
    if g.max_degree() > 4:
        raise ValueError("source graph must have maximum degree at most 4")
    classes = vizing_edge_coloring(g)
    while len(classes) < 5:
        classes.append(set())
    return classes[:5]


def tvc_witness_from_coloring(g: StaticGraph, coloring: dict[int, int]) -> Timeline:
    """Each vertex active through the two blocks other than its color's."""
    _check_coloring(g, coloring)
    out = []
    for v in range(1, g.n + 1):
        for j in (1, 2, 3):
            if j != coloring[v]:
                lo, hi = TVC_BLOCKS[j - 1]
                out.append(ActivityInterval(v, lo, hi))
    return as_timeline(out)


def _check_coloring(g: StaticGraph, coloring: dict[int, int]) -> None:
    for v in range(1, g.n + 1):
        if coloring.get(v) not in (1, 2, 3):
            raise ValueError(f"vertex {v} misses a color in 1..3")
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise ValueError(f"edge ({u}, {v}) is monochromatic")


# -------------------- 3-coloring -> full domination (T = 35) --------------------

TDS_H = (1, 14)
TDS_BLOCKS = [(15, 21), (22, 28), (29, 35)]


def tds_ids(i: int) -> tuple[int, int, int, int, int]:
    """(v, v', u, u', u'') ids for source vertex i in the T=35 construction."""
    base = 5 * (i - 1)
    return base + 1, base + 2, base + 3, base + 4, base + 5


def reduce_3col_to_tds(g: StaticGraph) -> ProblemInstance:
    """14 identical warm-up snapshots, then three 7-snapshot color blocks.

    Per source vertex i: v_i carries the source role, v_i' pins two of its
    intervals to color blocks, u_i/u_i'/u_i'' keep v_i' non-isolated; the u
    roles rotate between blocks. k=3, ell=6.
    """
    classes = _five_classes(g)
    n5 = 5 * g.n
    h_edges = set()
    for i in range(1, g.n + 1):
        v, vp, u, up, upp = tds_ids(i)
        h_edges.add(norm_edge(v, u))
        h_edges.add(norm_edge(up, upp))
    snaps: list[frozenset[Edge]] = [frozenset(h_edges)] * 14

    for block in range(3):
        # The block's "u" role cycles u -> u' -> u'' across blocks; the other
        # two u-vertices form the block's standing pair edge.
        pair_edges = set()
        mates = {}
        for i in range(1, g.n + 1):
            v, vp, u, up, upp = tds_ids(i)
            us = [u, up, upp]
            mates[i] = us[block]
            rest = [w for w in us if w != us[block]]
            pair_edges.add(norm_edge(rest[0], rest[1]))
        opening = set(pair_edges)
        for i in range(1, g.n + 1):
            v, vp, *_ = tds_ids(i)
            opening.add(norm_edge(v, vp))
        snaps.append(frozenset(opening))
        for j in range(5):
            touched = {w for e in classes[j] for w in e}
            mid = set(pair_edges)
            for i in range(1, g.n + 1):
                v, vp, *_ = tds_ids(i)
                if i in touched:
                    mid.add(norm_edge(vp, mates[i]))
                else:
                    mid.add(norm_edge(v, vp))
            for u_src, v_src in classes[j]:
                mid.add(norm_edge(tds_ids(u_src)[0], tds_ids(v_src)[0]))
            snaps.append(frozenset(mid))
        snaps.append(snaps[-6])  # closing snapshot equals the opening one

    return ProblemInstance(TemporalGraph(n5, tuple(snaps)), ProblemKind.DS, k=3, ell=6)


def tds_witness_from_coloring(g: StaticGraph, coloring: dict[int, int]) -> Timeline:
    """The explicit block-aligned intervals: v_i skips its color block, v_i'
    takes it, and the u trio patrols the warm-up halves plus two blocks each."""
    _check_coloring(g, coloring)
    out = []
    h1, h2 = (1, 7), (8, 14)
    b = TDS_BLOCKS
    for i in range(1, g.n + 1):
        v, vp, u, up, upp = tds_ids(i)
        j = coloring[i]
        for r in (1, 2, 3):
            if r != j:
                out.append(ActivityInterval(v, *b[r - 1]))
        out.append(ActivityInterval(vp, *b[j - 1]))
        out.append(ActivityInterval(v, *h1))
        out.append(ActivityInterval(vp, *h1))
        out.append(ActivityInterval(vp, *h2))
        out.append(ActivityInterval(u, *h2))
        out.append(ActivityInterval(u, *b[0]))
        out.append(ActivityInterval(u, *b[1]))
        out.append(ActivityInterval(up, *h1))
        out.append(ActivityInterval(up, *b[1]))
        out.append(ActivityInterval(up, *b[2]))
        out.append(ActivityInterval(upp, *h2))
        out.append(ActivityInterval(upp, *b[0]))
        out.append(ActivityInterval(upp, *b[2]))
    return as_timeline(out)


# -------------------- static domination -> partial domination (T = 2) --------------------


def reduce_ds_to_tpds(g: StaticGraph, k_ds: int) -> ProblemInstance:
    """First snapshot is the graph, second is edgeless; t = 2n - k_ds, k=1, ell=0."""
    snaps = (frozenset(g.edges), frozenset())
    return ProblemInstance(
        TemporalGraph(g.n, snaps), ProblemKind.PDS, k=1, ell=0, t=2 * g.n - k_ds
    )


def tpds_witness_from_dominating_set(g: StaticGraph, dom: set[int]) -> Timeline:
    """Dominating set active in the first snapshot, everyone else in the second."""
    out = [ActivityInterval(v, 1, 1) for v in sorted(dom)]
    out += [ActivityInterval(v, 2, 2) for v in range(1, g.n + 1) if v not in dom]
    return as_timeline(out)


# -------------------- 3-coloring -> covering with one-shot edges --------------------

IMW4_COLORS = ("r", "y", "b")


def imw4_ids(v: int) -> dict[str, list[int]]:
    """Per source vertex v: ids for r^1..4, y^1..4, b^1..4, x^1..4."""
    base = 16 * (v - 1)
    return {
        "r": [base + 1 + j for j in range(4)],
        "y": [base + 5 + j for j in range(4)],
        "b": [base + 9 + j for j in range(4)],
        "x": [base + 13 + j for j in range(4)],
    }


def _incident_index(g: StaticGraph) -> dict[int, list[Edge]]:
    """Each vertex's incident edges in ascending other-endpoint order."""
    inc: dict[int, list[Edge]] = {v: [] for v in range(1, g.n + 1)}
    for e in sorted(g.edges):
        inc[e[0]].append(e)
        inc[e[1]].append(e)
    for v in inc:
        inc[v].sort(key=lambda e: e[1] if e[0] == v else e[0])
    return inc


def reduce_3col_to_tvc_imw4(g: StaticGraph) -> ProblemInstance:
    """Stars G_{v,c,i} (12 per source vertex) then singletons G_{e,c}; k=2, ell=0.

    Snapshot order: vertices ascending, colors (r, y, b), i = 1..4; then
    edges ascending with the three colors. Every underlying edge appears in
    exactly one snapshot.
    """
    if g.max_degree() > 4:
        raise ValueError("source graph must have maximum degree at most 4")
    inc = _incident_index(g)
    snaps: list[frozenset[Edge]] = []
    for v in range(1, g.n + 1):
        ids = imw4_ids(v)
        for c in IMW4_COLORS:
            for i in range(4):
                x = ids["x"][i]
                snaps.append(frozenset(norm_edge(x, cv) for cv in ids[c]))
    for e in sorted(g.edges):
        u, v = e
        i = inc[u].index(e)
        j = inc[v].index(e)
        for c in IMW4_COLORS:
            snaps.append(frozenset({norm_edge(imw4_ids(u)[c][i], imw4_ids(v)[c][j])}))
    n16 = 16 * g.n
    return ProblemInstance(TemporalGraph(n16, tuple(snaps)), ProblemKind.VC, k=2, ell=0)


def imw4_snapshot_index(g: StaticGraph, v: int, c: str, i: int) -> int:
    """1-based step of star snapshot G_{v,c,i} (i in 1..4)."""
    ci = IMW4_COLORS.index(c)
    return 12 * (v - 1) + 4 * ci + i


def imw4_edge_snapshot_index(g: StaticGraph, e: Edge, c: str) -> int:
    edges = sorted(g.edges)
    return 12 * g.n + 3 * edges.index(e) + IMW4_COLORS.index(c) + 1


def imw4_witness_from_coloring(g: StaticGraph, coloring: dict[int, str]) -> Timeline:
    """The eight-part witness: color-class leaves twice in their own stars,
    star centers paired across the remaining colors, off-color leaves once in
    a star and once in their unique edge snapshot."""
    for v in range(1, g.n + 1):
        if coloring.get(v) not in IMW4_COLORS:
            raise ValueError(f"vertex {v} misses a color in {IMW4_COLORS}")
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise ValueError(f"edge ({u}, {v}) is monochromatic")
    inc = _incident_index(g)
    out = []
    for v in range(1, g.n + 1):
        ids = imw4_ids(v)
        c = coloring[v]
        alpha, beta = [cc for cc in IMW4_COLORS if cc != c]
        at = lambda cc, i: imw4_snapshot_index(g, v, cc, i)  # noqa: E731
        for leaf in ids[c]:
            out.append(ActivityInterval(leaf, at(c, 1), at(c, 1)))
            out.append(ActivityInterval(leaf, at(c, 2), at(c, 2)))
        x = ids["x"]
        out.append(ActivityInterval(x[0], at(alpha, 1), at(alpha, 1)))
        out.append(ActivityInterval(x[0], at(beta, 1), at(beta, 1)))
        out.append(ActivityInterval(x[1], at(alpha, 2), at(alpha, 2)))
        out.append(ActivityInterval(x[1], at(beta, 2), at(beta, 2)))
        out.append(ActivityInterval(x[2], at(c, 3), at(c, 3)))
        out.append(ActivityInterval(x[2], at(alpha, 3), at(alpha, 3)))
        out.append(ActivityInterval(x[3], at(c, 4), at(c, 4)))
        out.append(ActivityInterval(x[3], at(beta, 4), at(beta, 4)))
        for j in range(4):
            out.append(ActivityInterval(ids[alpha][j], at(alpha, 4), at(alpha, 4)))
            out.append(ActivityInterval(ids[beta][j], at(beta, 3), at(beta, 3)))
        for cc in (alpha, beta):
            for i, e in enumerate(inc[v]):
                step = imw4_edge_snapshot_index(g, e, cc)
                out.append(ActivityInterval(ids[cc][i], step, step))
    return as_timeline(out)


# -------------------- 3-SAT(2,2) -> partial domination --------------------


class CnfFormula:
    """Clauses of literals (positive/negative variable indices), DIMACS-style."""

    def __init__(self, n_vars: int, clauses: list[tuple[int, ...]]):
        self.n_vars = n_vars
        self.clauses = [tuple(cl) for cl in clauses]
        for cl in self.clauses:
            for lit in cl:
                if lit == 0 or abs(lit) > n_vars:
                    raise ValueError(f"bad literal {lit}")

    def check_22_shape(self) -> None:
        """Every variable exactly twice positive and twice negative; 3-clauses."""
        pos = [0] * (self.n_vars + 1)
        neg = [0] * (self.n_vars + 1)
        for cl in self.clauses:
            if len(cl) != 3:
                raise ValueError("every clause must have exactly three literals")
            for lit in cl:
                if lit > 0:
                    pos[lit] += 1
                else:
                    neg[-lit] += 1
        for x in range(1, self.n_vars + 1):
            if pos[x] != 2 or neg[x] != 2:
                raise ValueError(
                    f"variable {x} appears {pos[x]} times positively and "
                    f"{neg[x]} negatively; need exactly 2 + 2"
                )

    def is_satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(
            any((lit > 0) == assignment[abs(lit)] for lit in cl) for cl in self.clauses
        )


SAT_LABELS = ("x", "nx", "p", "q", "r", "s", "t")


def sat_variable_ids(i: int) -> dict[str, tuple[int, int]]:
    """Ids of the 14 vertices of variable i: label -> (copy 1, copy 2)."""
    base = 14 * (i - 1)
    return {lab: (base + 1 + j, base + 8 + j) for j, lab in enumerate(SAT_LABELS)}


def sat_clause_ids(n_vars: int, j: int) -> tuple[int, ...]:
    """Ids (a, a', b, b', c, c') of clause j's helper vertices."""
    base = 14 * n_vars + 6 * (j - 1)
    return tuple(base + 1 + r for r in range(6))


def _literal_vertex(f: CnfFormula, i: int, positive: bool, occurrence: int) -> int:
    ids = sat_variable_ids(i)
    lab = "x" if positive else "nx"
    return ids[lab][occurrence - 1]


def _occurrences(f: CnfFormula) -> dict[tuple[int, int], int]:
    """(clause index, slot) -> literal-appearance vertex id (clause order fixes it)."""
    seen_pos = [0] * (f.n_vars + 1)
    seen_neg = [0] * (f.n_vars + 1)
    out = {}
    for j, cl in enumerate(f.clauses, start=1):
        for slot, lit in enumerate(cl):
            x = abs(lit)
            if lit > 0:
                seen_pos[x] += 1
                out[(j, slot)] = _literal_vertex(f, x, True, seen_pos[x])
            else:
                seen_neg[x] += 1
                out[(j, slot)] = _literal_vertex(f, x, False, seen_neg[x])
    return out


def _crown_edges(i: int, drop: str) -> set[Edge]:
    """Biclique between the two vertex copies minus the same-label matching,
    with the `drop` label excluded from both sides (30 edges)."""
    ids = sat_variable_ids(i)
    labs = [lab for lab in SAT_LABELS if lab != drop]
    out = set()
    for la in labs:
        for lb in labs:
            if la != lb:
                out.add(norm_edge(ids[la][0], ids[lb][1]))
    return out


def reduce_3sat22_to_tpds(f: CnfFormula) -> ProblemInstance:
    """Variable crowns, clause triangles with helper attachments, dummy triangles.

    Layout: variable i owns steps 6i-5..6i (three snapshots of the crown
    without the negative copies, three without the positive ones); clause j
    owns step 6n+j and dummy steps 6n+m+6j-5..6n+m+6j. Clause slot 1
    attaches to (a, a'), slot 2 to (b, b'), slot 3 to (c, c').
    t = 76n + 21m, k = 1, ell = 0.
    """
    f.check_22_shape()
    n, m = f.n_vars, len(f.clauses)
    occ = _occurrences(f)
    snaps: list[frozenset[Edge]] = []
    for i in range(1, n + 1):
        pos_crown = frozenset(_crown_edges(i, "nx"))
        neg_crown = frozenset(_crown_edges(i, "x"))
        snaps += [pos_crown] * 3 + [neg_crown] * 3
    for j, cl in enumerate(f.clauses, start=1):
        verts = [occ[(j, slot)] for slot in range(3)]
        helpers = sat_clause_ids(n, j)
        es = set()
        for a in range(3):
            for b in range(a + 1, 3):
                if verts[a] != verts[b]:
                    es.add(norm_edge(verts[a], verts[b]))
        for slot in range(3):
            es.add(norm_edge(verts[slot], helpers[2 * slot]))
            es.add(norm_edge(verts[slot], helpers[2 * slot + 1]))
        snaps.append(frozenset(es))
    for j in range(1, m + 1):
        a, ap, b, bp, c, cp = sat_clause_ids(n, j)
        tri1 = frozenset({norm_edge(a, b), norm_edge(b, c), norm_edge(a, c)})
        tri2 = frozenset({norm_edge(ap, bp), norm_edge(bp, cp), norm_edge(ap, cp)})
        snaps += [tri1] * 3 + [tri2] * 3
    nv = 14 * n + 6 * m
    return ProblemInstance(
        TemporalGraph(nv, tuple(snaps)), ProblemKind.PDS, k=1, ell=0, t=76 * n + 21 * m
    )


def tpds_witness_from_assignment(f: CnfFormula, assignment: dict[int, bool]) -> Timeline:
    """Crown pairs per variable snapshot, true literals in their clause
    snapshots, helpers spread over the dummy triangles."""
    if not f.is_satisfied_by(assignment):
        raise ValueError("assignment does not satisfy the formula")
    n, m = f.n_vars, len(f.clauses)
    occ = _occurrences(f)
    out = []
    for i in range(1, n + 1):
        ids = sat_variable_ids(i)
        # The true literal's two copies go to their clause snapshots; the 12
        # remaining vertices pair up, one pair per crown snapshot. The first
        # crown half excludes the negative copies, the second the positive.
        if assignment[i]:
            first, second = ("p", "q", "r"), ("nx", "s", "t")
        else:
            first, second = ("x", "p", "q"), ("r", "s", "t")
        base = 6 * (i - 1)
        for step_off, lab in enumerate(first + second):
            step = base + 1 + step_off
            out.append(ActivityInterval(ids[lab][0], step, step))
            out.append(ActivityInterval(ids[lab][1], step, step))
    for j, cl in enumerate(f.clauses, start=1):
        for slot, lit in enumerate(cl):
            if (lit > 0) == assignment[abs(lit)]:
                v = occ[(j, slot)]
                step = 6 * n + j
                out.append(ActivityInterval(v, step, step))
    for j in range(1, m + 1):
        helpers = sat_clause_ids(n, j)
        base = 6 * n + m + 6 * (j - 1)
        order = (helpers[0], helpers[2], helpers[4], helpers[1], helpers[3], helpers[5])
        for off, v in enumerate(order):
            out.append(ActivityInterval(v, base + 1 + off, base + 1 + off))
    return as_timeline(out)


# -------------------- source-format parsing --------------------


def parse_static_graph(text: str) -> StaticGraph:
    """Edge-list format: first line n, then one 'u v' line per edge; '#' comments."""
    lines = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {ln!r}")
        edges.add(norm_edge(int(parts[0]), int(parts[1])))
    return StaticGraph(n, frozenset(edges))


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """DIMACS cnf: 'p cnf <vars> <clauses>' then zero-terminated clause lines."""
    n_vars = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith(("c", "%")):
            continue
        if ln.startswith("p"):
            parts = ln.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line {ln!r}")
            n_vars = int(parts[2])
            continue
        for tok in ln.split():
            lit = int(tok)
            if lit == 0:
                if pending:
                    clauses.append(tuple(pending))
                    pending = []
            else:
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if n_vars is None:
        raise ValueError("missing 'p cnf' line")
    return CnfFormula(n_vars, clauses)


# -------------------- the worked 5-vertex demo instance --------------------


def demo_instance() -> TemporalGraph:
    """A 5-vertex, 6-snapshot instance used throughout the docs and tests.

    All 23 temporal edges are coverable by a 1-activity 2-timeline (see
    demo_cover_witness).
    """
    return TemporalGraph.from_edge_lists(
        5,
        [
            [(2, 4), (3, 4), (4, 5)],
            [(1, 2), (2, 3), (2, 4), (2, 5), (4, 5)],
            [(1, 2), (3, 4), (4, 5), (3, 5)],
            [(2, 3), (4, 5), (1, 2), (3, 4)],
            [(1, 5), (3, 5), (1, 3)],
            [(1, 4), (2, 5), (3, 5), (1, 2)],
        ],
    )


def demo_cover_witness() -> Timeline:
    """The shipped 1-activity 2-timeline covering all 23 temporal edges."""
    return as_timeline(
        [(4, 1, 3), (2, 2, 4), (3, 3, 5), (1, 4, 6), (5, 4, 6)]
    )
