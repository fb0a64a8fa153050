"""Command-line interface: ``veclique solve|gen|bench|verify|dimacs-suite``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bench import PAPER_GRID, SEEDS_PER_CELL, parse_grid, rows_to_csv, run_dimacs_suite, run_random_suite
from .dimacs import DimacsError, read_dimacs, write_dimacs
from .generators import DIMACS_FAMILIES, GnpSpec, gen_gnp
from .graph import Graph, GraphError, is_clique_subset
from .oracle import BRUTE_FORCE_MAX_N, branch_and_bound_max_clique, brute_force_max_clique
from .solver import Mode, SolveResult, SolverConfig, Status, find_maximum_clique

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

DEFAULT_MAX_COMBINATIONS = 10**8


def format_result(res: SolveResult) -> str:
    """Human line in the published output style plus a JSON stats line."""
    nodes = " ".join(str(v) for v in res.clique.one_based()) if res.clique else ""
    if res.status is Status.EXACT:
        head = f"The size of the maximum clique: {res.size}. The nodes of this clique are: {nodes}"
    else:
        head = (f"Budget exhausted; best clique found so far has size {res.size}. "
                f"The nodes of this clique are: {nodes}")
    st = res.stats
    stats = {
        "status": res.status.value,
        "size": res.size,
        "iterations": st.iterations,
        "combinations": st.combinations_enumerated,
        "isclique_calls": st.isclique_calls,
        "adjacency_probes": st.adjacency_probes,
        "seconds": round(st.elapsed, 6),
    }
    return head + "\n" + json.dumps(stats)


def _config(args: argparse.Namespace) -> SolverConfig:
    budget: Optional[int] = None if args.unlimited else args.max_combinations
    return SolverConfig(mode=Mode(args.mode), combination_budget=budget, time_budget=args.time_limit)


def _load(path: str) -> Graph:
    return read_dimacs(path)[1]


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = _load(args.file)
    except (OSError, DimacsError, GraphError) as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    res = find_maximum_clique(g, _config(args))
    if res.clique is not None and not is_clique_subset(g, res.clique.members):
        raise RuntimeError("solver produced a vertex set that is not a clique")
    print(format_result(res))
    return EXIT_OK if res.status is Status.EXACT else EXIT_BUDGET


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GnpSpec(args.n, args.p, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    g = gen_gnp(spec)
    text = write_dimacs(g, [f"G(n,p) n={spec.n} p={spec.p!r} seed={spec.seed}"])
    Path(args.out).write_text(text)
    print(f"wrote {args.out}: n={g.n} edges={g.num_edges}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.suite == "random":
        grid = parse_grid(args.grid) if args.grid else PAPER_GRID
        rows = run_random_suite(cfg, grid, args.seeds, args.jobs)
    else:
        if not args.dir:
            print("error: --dir is required for the dimacs suite", file=sys.stderr)
            return EXIT_INPUT
        rows = run_dimacs_suite(cfg, args.dir, args.jobs)
    text = rows_to_csv(rows)
    if args.csv == "-":
        sys.stdout.write(text)
    else:
        Path(args.csv).write_text(text)
        print(f"wrote {len(rows)} rows to {args.csv}")
    return EXIT_OK


def verify_graph(name: str, g: Graph) -> tuple[bool, str]:
    """Solve ``g`` and compare with every oracle that accepts it."""
    res = find_maximum_clique(g)
    sizes = {"ve": res.size}
    if g.n:
        if g.n <= BRUTE_FORCE_MAX_N:
            sizes["brute"] = brute_force_max_clique(g).size
        sizes["bnb"] = branch_and_bound_max_clique(g).size
    valid = res.clique is None or is_clique_subset(g, res.clique.members)
    ok = valid and len(set(sizes.values())) == 1
    detail = " ".join(f"{k}={v}" for k, v in sizes.items())
    return ok, f"{name}: {detail} {'match' if ok else 'MISMATCH'}"


def cmd_verify(args: argparse.Namespace) -> int:
    instances: list[tuple[str, Graph]] = []
    try:
        if args.random:
            n, p, seeds = args.random.split(",")
            for seed in range(int(seeds)):
                spec = GnpSpec(int(n), float(p), seed)
                instances.append((f"gnp-n{spec.n}-d{spec.p:g}-s{seed}", gen_gnp(spec)))
        elif args.file:
            instances.append((args.file, _load(args.file)))
        else:
            print("error: give a file or --random n,p,seeds", file=sys.stderr)
            return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    matched = 0
    for name, g in instances:
        ok, line = verify_graph(name, g)
        matched += ok
        print(line)
    print(f"{matched}/{len(instances)} matched")
    return EXIT_OK if matched == len(instances) else EXIT_MISMATCH


def cmd_dimacs_suite(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, (build, *_rest) in DIMACS_FAMILIES.items():
        g = build()
        (out / f"{name}.clq").write_text(write_dimacs(g, [f"{name} (regenerated from its construction)"]))
        print(f"wrote {out / name}.clq: n={g.n} edges={g.num_edges}")
    return EXIT_OK


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PRUNED.value)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--max-combinations", type=int, default=DEFAULT_MAX_COMBINATIONS,
                       help="combination budget per solve (default %(default)s)")
    group.add_argument("--unlimited", action="store_true", help="no combination budget")
    p.add_argument("--time-limit", type=float, default=None, help="wall-clock seconds per solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="veclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum clique of a DIMACS file")
    p.add_argument("file")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="write a seeded G(n,p) graph as DIMACS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    p.add_argument("--suite", choices=["random", "dimacs"], required=True)
    p.add_argument("--grid", help="n:p cells, comma separated (default: the published grid)")
    p.add_argument("--seeds", type=int, default=SEEDS_PER_CELL)
    p.add_argument("--dir", help="directory of .clq files for the dimacs suite")
    p.add_argument("--csv", required=True, help="output path, or - for stdout")
    p.add_argument("--jobs", type=int, default=1)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="cross-check the solver against the exact oracles")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", metavar="N,P,SEEDS")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dimacs-suite", help="write the reconstructible DIMACS instances")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dimacs_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
