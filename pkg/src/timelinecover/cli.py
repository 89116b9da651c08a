"""Command-line surface: solve, params, verify, gen, bench.

Instance text format (.tg): line one "n T"; then for each snapshot a line
"m_i" followed by m_i lines "u v" (1-based). Lines starting with '#' are
ignored. A file whose first non-space character is '{' is parsed as JSON
({"n": ..., "snapshots": [[[u, v], ...], ...]}) instead.

Exit codes: 0 = yes, 1 = no, 2 = error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import branching, config_ilp, dp_vimw, generators, kernel, oracle, params
from .core import (
    BudgetExceeded,
    GuardExceeded,
    ProblemInstance,
    ProblemKind,
    TemporalGraph,
    Timeline,
    as_timeline,
    full_tiling,
    verify,
)

ALGORITHMS = ("auto", "oracle", "dp", "vimwx", "kernel", "branch", "cc", "ilp0")


class InstanceParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_instance(text: str) -> TemporalGraph:
    """Parse the .tg text format, or the JSON alternative when text starts with '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        return TemporalGraph.from_edge_lists(data["n"], data["snapshots"])

    rows = []  # (line number, tokens)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))

    def take(what: str) -> tuple[int, list[str]]:
        if not rows:
            raise InstanceParseError(0, f"unexpected end of file, expected {what}")
        return rows.pop(0)

    lineno, head = take("'n T'")
    if len(head) != 2:
        raise InstanceParseError(lineno, f"expected 'n T', got {' '.join(head)!r}")
    try:
        n, T = int(head[0]), int(head[1])
    except ValueError:
        raise InstanceParseError(lineno, "n and T must be integers") from None
    if n < 1 or T < 1:
        raise InstanceParseError(lineno, f"need n >= 1 and T >= 1, got n={n} T={T}")

    snapshots = []
    for i in range(1, T + 1):
        lineno, cnt_tok = take(f"edge count of snapshot {i}")
        if len(cnt_tok) != 1:
            raise InstanceParseError(lineno, f"expected an edge count, got {' '.join(cnt_tok)!r}")
        m = int(cnt_tok[0])
        if m < 0:
            raise InstanceParseError(lineno, "edge count must be non-negative")
        seen = set()
        edges = []
        for _ in range(m):
            lineno, pair = take(f"an edge of snapshot {i}")
            if len(pair) != 2:
                raise InstanceParseError(lineno, f"expected 'u v', got {' '.join(pair)!r}")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InstanceParseError(lineno, f"self-loop {u} {v}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InstanceParseError(lineno, f"endpoint outside 1..{n} in {u} {v}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InstanceParseError(lineno, f"duplicate edge {u} {v} in snapshot {i}")
            seen.add(e)
            edges.append(e)
        snapshots.append(edges)
    if rows:
        raise InstanceParseError(rows[0][0], "trailing content after the last snapshot")
    return TemporalGraph.from_edge_lists(n, snapshots)


def emit_instance(g: TemporalGraph) -> str:
    lines = [f"{g.n} {g.T}"]
    for i in range(1, g.T + 1):
        edges = sorted(g.snapshots[i - 1])
        lines.append(str(len(edges)))
        lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def emit_witness(tl: Timeline) -> str:
    return json.dumps(
        {"intervals": [{"v": v, "a": a, "b": b} for v, a, b in tl]}, indent=None
    )


def parse_witness(text: str) -> Timeline:
    data = json.loads(text)
    return as_timeline((iv["v"], iv["a"], iv["b"]) for iv in data["intervals"])


def params_summary(g: TemporalGraph, ranks: list[int] | None = None) -> dict:
    if ranks is None:
        ranks = [1]
    return {
        "vimw": params.vimw(g),
        "imw": params.imw(g),
        "q": params.max_snapshot_edges(g),
        "vimw_x": {str(x): params.vimw_x(g, x) for x in ranks},
    }


# -------------------- solving --------------------


def _build_instance(g: TemporalGraph, kind: str, k: int, ell: int, t: int | None) -> ProblemInstance:
    pk = ProblemKind(kind.upper())
    if pk.is_partial:
        if t is None:
            raise ValueError(f"{pk.value} needs --t")
        return ProblemInstance(g, pk, k, ell, t)
    if t is not None:
        raise ValueError(f"{pk.value} has an implicit target; drop --t")
    return ProblemInstance(g, pk, k, ell)


def _solve_decision(
    inst: ProblemInstance,
    algorithm: str,
    seed: int,
    delta: float,
    dp_budget: int,
    oracle_budget: int,
) -> tuple[bool, int | None, Timeline | None, str]:
    """Returns (decision, optimum if known, witness if yes, algorithm used)."""
    g, k, ell = inst.graph, inst.k, inst.ell
    kind = inst.kind

    if algorithm == "auto":
        return _solve_auto(inst, seed, delta, dp_budget, oracle_budget)

    if algorithm == "oracle":
        res = oracle.oracle_solve(inst, budget=oracle_budget)
        return res.decision, res.optimum, res.witness if res.decision else None, "oracle"

    if algorithm == "dp":
        if kind.is_domination:
            res = dp_vimw.solve_pds(g, k, ell, budget=dp_budget)
        else:
            res = dp_vimw.solve_pvc(g, k, ell, budget=dp_budget)
        dec = res.optimum >= inst.target
        return dec, res.optimum, res.witness if dec else None, "dp"

    if algorithm == "vimwx":
        if kind is ProblemKind.DS:
            dec, wit = dp_vimw.solve_ds_vimw_x(g, k, ell, budget=dp_budget)
            return dec, None, wit, "vimwx"
        if kind.is_domination:
            raise ValueError("vimwx does not apply to PDS (two snapshots already hard)")
        res = dp_vimw.solve_pvc_vimwx(g, k, ell, budget=dp_budget)
        dec = res.optimum >= inst.target
        return dec, res.optimum, res.witness if dec else None, "vimwx"

    if algorithm == "kernel":
        if kind is not ProblemKind.DS:
            raise ValueError("kernel applies to full DS only")
        out = kernel.kernelize_ds(g, k, ell)
        if out.answered:
            wit = full_tiling(g, k, ell) if out.decision else None
            return bool(out.decision), None, wit, f"kernel:{out.reason}"
        raise ValueError(
            "kernel certified the instance small without answering; "
            "run --algo dp or --algo branch on it"
        )

    if algorithm == "branch":
        if kind is ProblemKind.DS:
            dec, wit = branching.solve_ds_branching(g, k, ell)
        elif kind is ProblemKind.VC:
            dec, wit = branching.solve_vc_branching(g, k, ell)
        else:
            raise ValueError("branch applies to the full kinds only")
        return dec, None, wit, "branch"

    if algorithm == "cc":
        if not kind.is_partial:
            raise ValueError("cc applies to the partial kinds only")
        from . import color_coding

        plan = color_coding.ColoringTrialPlan.auto(inst.target, delta=delta, master_seed=seed)
        dec, wit = color_coding.solve_partial_cc(inst, plan)
        return dec, None, wit, "cc"

    if algorithm == "ilp0":
        if ell != 0:
            raise ValueError("ilp0 requires ell = 0")
        prog = config_ilp.build_config_program(g, k, inst.target, kind)
        feasible, _, wit = config_ilp.solve_config_exact(prog)
        return feasible, None, wit, "ilp0"

    raise ValueError(f"unknown algorithm {algorithm!r}")


def _solve_auto(
    inst: ProblemInstance, seed: int, delta: float, dp_budget: int, oracle_budget: int
) -> tuple[bool, int | None, Timeline | None, str]:
    """kernel precheck (DS) -> preprocessed dp when affordable -> branch -> oracle."""
    g, k, ell = inst.graph, inst.k, inst.ell
    if inst.kind is ProblemKind.DS:
        out = kernel.kernelize_ds(g, k, ell)
        if out.answered:
            wit = full_tiling(g, k, ell) if out.decision else None
            return bool(out.decision), None, wit, f"kernel:{out.reason}"

    radix = (k + 1) * (ell + 2)
    if inst.kind.is_domination:
        width = max(params.vimw(g), 1)
    else:
        g1, _ = dp_vimw._graph_preprocess_pvc(g, k, ell)
        g2, _ = dp_vimw._graph_reduce_large_bags_pvc(g1, k, ell)
        width = max(params.vimw(g2), 1)
    if radix**width <= dp_budget:
        if inst.kind.is_domination:
            res = dp_vimw.solve_pds(g, k, ell, budget=dp_budget)
        else:
            res = dp_vimw.solve_pvc_vimwx(g, k, ell, budget=dp_budget)
        dec = res.optimum >= inst.target
        return dec, res.optimum, res.witness if dec else None, "dp"

    if inst.kind is ProblemKind.DS:
        dec, wit = branching.solve_ds_branching(g, k, ell)
        return dec, None, wit, "branch"
    if inst.kind is ProblemKind.VC:
        dec, wit = branching.solve_vc_branching(g, k, ell)
        return dec, None, wit, "branch"

    if oracle.search_space_size(g.n, g.T, k) <= oracle_budget:
        res = oracle.oracle_solve(inst, budget=oracle_budget)
        return res.decision, res.optimum, res.witness if res.decision else None, "oracle"

    raise BudgetExceeded(
        "no algorithm fits the budgets; raise --dp-budget or --oracle-budget, "
        "or try --algo cc for partial kinds"
    )


# -------------------- commands --------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.input))
    inst = _build_instance(g, args.kind, args.k, args.ell, args.t)
    started = time.perf_counter()
    decision, optimum, witness, algo = _solve_decision(
        inst, args.algo, args.seed, args.delta, args.dp_budget, args.oracle_budget
    )
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    witness_path = None
    if decision and witness is not None and args.witness:
        with open(args.witness, "w") as fh:
            fh.write(emit_witness(witness) + "\n")
        witness_path = args.witness
    result = {
        "decision": decision,
        "algorithm": algo,
        "params": params_summary(g, ranks=[1, 2, 3]),
        "elapsed_ms": round(elapsed_ms, 3),
    }
    if optimum is not None:
        result["optimum"] = optimum
    if witness_path:
        result["witness_path"] = witness_path
    print(json.dumps(result, sort_keys=True))
    return 0 if decision else 1


def _cmd_params(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.input))
    ranks = [int(x) for x in args.ranks.split(",")] if args.ranks else list(range(1, g.T + 1))
    print(json.dumps(params_summary(g, ranks), sort_keys=True))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_instance(_read(args.input))
    inst = _build_instance(g, args.kind, args.k, args.ell, args.t)
    tl = parse_witness(_read(args.witness))
    report = verify(inst, tl)
    print(
        json.dumps(
            {
                "well_formed": report.well_formed,
                "k_respected": report.k_respected,
                "ell_respected": report.ell_respected,
                "covered": report.covered,
                "dominated": report.dominated,
                "satisfies_instance": report.satisfies_instance,
            },
            sort_keys=True,
        )
    )
    return 0 if report.satisfies_instance else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    meta: dict = {}
    if args.generator == "random":
        g = generators.gen_random(args.n, args.T, args.p, args.seed)
        meta = {"kind": None}
    elif args.generator == "demo":
        g = generators.demo_instance()
        meta = {"kind": None}
    else:
        if args.generator == "reduceds":
            src = generators.parse_static_graph(_read(args.source))
            inst = generators.reduce_ds_to_tpds(src, args.k_ds)
        elif args.generator == "reduce3sat22":
            f = generators.parse_dimacs_cnf(_read(args.source))
            inst = generators.reduce_3sat22_to_tpds(f)
        else:
            src = generators.parse_static_graph(_read(args.source))
            builder = {
                "reduce3col-tvc": generators.reduce_3col_to_tvc,
                "reduce3col-tds": generators.reduce_3col_to_tds,
                "reduce3col-imw4": generators.reduce_3col_to_tvc_imw4,
            }[args.generator]
            inst = builder(src)
        g = inst.graph
        meta = {"kind": inst.kind.value, "k": inst.k, "ell": inst.ell, "t": inst.t}

    header = "# " + json.dumps({"generator": args.generator, **meta}, sort_keys=True) + "\n"
    text = header + emit_instance(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if meta.get("kind"):
        print(json.dumps(meta, sort_keys=True), file=sys.stderr)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    rows = []
    for idx in range(args.count):
        seed = args.seed + idx
        g = generators.gen_random(args.n, args.T, args.p, seed)
        base = {
            "n": g.n,
            "T": g.T,
            "p": args.p,
            "seed": seed,
            "vimw": params.vimw(g),
            "imw": params.imw(g),
            "q": params.max_snapshot_edges(g),
        }
        for kind in ("VC", "PVC", "DS", "PDS"):
            pk = ProblemKind(kind)
            t = None
            if pk.is_partial:
                total = g.n * g.T if pk.is_domination else g.total_temporal_edges()
                t = (total + 1) // 2
            inst = _build_instance(g, kind, args.k, args.ell, t)
            ref = oracle.oracle_solve(inst, budget=args.oracle_budget)
            row = dict(base, kind=kind, k=args.k, ell=args.ell, t=t, oracle_optimum=ref.optimum)
            for algo in _applicable_algorithms(pk, args.ell):
                started = time.perf_counter()
                try:
                    dec, opt, _, _ = _solve_decision(
                        inst, algo, seed, args.delta, args.dp_budget, args.oracle_budget
                    )
                    agree = dec == ref.decision and (opt is None or opt == ref.optimum)
                except (BudgetExceeded, GuardExceeded):
                    agree = None
                ms = (time.perf_counter() - started) * 1000.0
                row[f"{algo}_ms"] = round(ms, 3)
                row[f"{algo}_agrees"] = agree
            rows.append(row)

    fields = sorted({key for row in rows for key in row})
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def _applicable_algorithms(pk: ProblemKind, ell: int) -> list[str]:
    algos = ["dp"]
    if pk in (ProblemKind.VC, ProblemKind.DS):
        algos.append("branch")
    if pk is not ProblemKind.PDS:
        algos.append("vimwx")
    if pk.is_partial:
        algos.append("cc")
    if ell == 0:
        algos.append("ilp0")
    return algos


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="instance file (.tg text or JSON), '-' for stdin")
    p.add_argument("--kind", required=True, choices=["vc", "pvc", "ds", "pds"])
    p.add_argument("-k", type=int, required=True, help="max intervals per vertex")
    p.add_argument("-l", "--ell", type=int, required=True, help="max interval length")
    p.add_argument("--t", type=int, default=None, help="target count (partial kinds)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="timelinecover",
        description="Exact timeline covering and domination solvers for temporal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide an instance")
    _add_instance_args(p_solve)
    p_solve.add_argument("--algo", default="auto", choices=ALGORITHMS)
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--delta", type=float, default=0.01, help="cc failure probability")
    p_solve.add_argument("--dp-budget", type=int, default=dp_vimw.DEFAULT_DP_BUDGET)
    p_solve.add_argument("--oracle-budget", type=int, default=oracle.DEFAULT_BUDGET)
    p_solve.add_argument("--witness", help="write the witness JSON here on yes")
    p_solve.set_defaults(func=_cmd_solve)

    p_params = sub.add_parser("params", help="print width parameters")
    p_params.add_argument("input")
    p_params.add_argument("--ranks", help="comma-separated ranks for vimw_x (default all)")
    p_params.set_defaults(func=_cmd_params)

    p_verify = sub.add_parser("verify", help="check a witness file")
    _add_instance_args(p_verify)
    p_verify.add_argument("witness", help="witness JSON file")
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="generate instances")
    p_gen.add_argument(
        "generator",
        choices=[
            "random",
            "demo",
            "reduce3col-tvc",
            "reduce3col-tds",
            "reduce3col-imw4",
            "reduce3sat22",
            "reduceds",
        ],
    )
    p_gen.add_argument("--source", help="edge-list or DIMACS source file")
    p_gen.add_argument("--n", type=int, default=5)
    p_gen.add_argument("--T", type=int, default=5)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--k-ds", type=int, default=1, help="budget for the reduceds source")
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="sweep a seeded grid, emit CSV")
    p_bench.add_argument("--n", type=int, default=4)
    p_bench.add_argument("--T", type=int, default=4)
    p_bench.add_argument("--p", type=float, default=0.5)
    p_bench.add_argument("-k", type=int, default=1)
    p_bench.add_argument("-l", "--ell", type=int, default=1)
    p_bench.add_argument("--count", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--delta", type=float, default=0.01)
    p_bench.add_argument("--dp-budget", type=int, default=dp_vimw.DEFAULT_DP_BUDGET)
    p_bench.add_argument("--oracle-budget", type=int, default=oracle.DEFAULT_BUDGET)
    p_bench.add_argument("--out", help="CSV path (default stdout)")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceeded, GuardExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
