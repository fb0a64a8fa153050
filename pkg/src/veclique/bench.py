"""Benchmark runs over random grids and DIMACS directories, written as CSV."""

from __future__ import annotations

import csv
import io
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .dimacs import DimacsError, read_dimacs
from .generators import GnpSpec, gen_gnp
from .graph import Graph, GraphError, is_clique_subset
from .solver import SolverConfig, find_maximum_clique

# (n, density) cells of the published random-graph table.
PAPER_GRID: tuple[tuple[int, float], ...] = (
    (100, 0.6), (100, 0.7),
    (200, 0.4), (200, 0.5),
    (300, 0.3), (300, 0.4),
    (500, 0.2), (500, 0.3),
)
SEEDS_PER_CELL = 8

CSV_COLUMNS = (
    "instance", "n", "density", "mode", "status", "size",
    "seconds", "combinations", "isclique_calls", "iterations",
)


@dataclass
class BenchRow:
    instance: str
    n: Optional[int]
    density: Optional[float]
    mode: str
    status: str
    size: Optional[float] = None
    seconds: Optional[float] = None
    combinations: Optional[float] = None
    isclique_calls: Optional[float] = None
    iterations: Optional[float] = None


assert tuple(f.name for f in fields(BenchRow)) == CSV_COLUMNS


def solve_row(name: str, g: Graph, density: float, cfg: SolverConfig) -> BenchRow:
    res = find_maximum_clique(g, cfg)
    if res.clique is not None and not is_clique_subset(g, res.clique.members):
        raise AssertionError(f"{name}: solver returned a non-clique")
    st = res.stats
    return BenchRow(
        instance=name, n=g.n, density=density, mode=cfg.mode.value,
        status=res.status.value, size=res.size, seconds=st.elapsed,
        combinations=st.combinations_enumerated, isclique_calls=st.isclique_calls,
        iterations=st.iterations,
    )


def _random_task(args: tuple[int, float, int, SolverConfig]) -> BenchRow:
    n, p, seed, cfg = args
    g = gen_gnp(GnpSpec(n, p, seed))
    return solve_row(f"gnp-n{n}-d{p:g}-s{seed}", g, p, cfg)


def _dimacs_task(args: tuple[Path, SolverConfig]) -> BenchRow:
    path, cfg = args
    try:
        _, g = read_dimacs(path)
    except (OSError, DimacsError, GraphError) as exc:
        return BenchRow(instance=path.stem, n=None, density=None, mode=cfg.mode.value,
                        status=f"error: {exc}")
    pairs = g.n * (g.n - 1) / 2
    density = round(g.num_edges / pairs, 4) if pairs else 0.0
    return solve_row(path.stem, g, density, cfg)


def _run(task, jobs: Sequence, workers: int) -> list[BenchRow]:
    if workers <= 1 or len(jobs) <= 1:
        return [task(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order whatever the completion order
        return list(pool.map(task, jobs))


def mean_row(label: str, rows: list[BenchRow]) -> BenchRow:
    ok = [r for r in rows if r.seconds is not None]
    statuses = {r.status for r in rows}
    status = statuses.pop() if len(statuses) == 1 else "mixed"

    def avg(attr: str) -> Optional[float]:
        vals = [getattr(r, attr) for r in ok]
        return statistics.fmean(vals) if vals else None

    return BenchRow(
        instance=label, n=rows[0].n, density=rows[0].density, mode=rows[0].mode,
        status=status, size=avg("size"), seconds=avg("seconds"),
        combinations=avg("combinations"), isclique_calls=avg("isclique_calls"),
        iterations=avg("iterations"),
    )


def run_random_suite(cfg: SolverConfig, grid: Iterable[tuple[int, float]] = PAPER_GRID,
                     seeds: int = SEEDS_PER_CELL, workers: int = 1) -> list[BenchRow]:
    """One row per (cell, seed) followed by a mean row for each cell."""
    grid = list(grid)
    jobs = [(n, p, seed, cfg) for n, p in grid for seed in range(seeds)]
    solved = _run(_random_task, jobs, workers)
    rows: list[BenchRow] = []
    for i, (n, p) in enumerate(grid):
        cell = solved[i * seeds:(i + 1) * seeds]
        rows.extend(cell)
        if cell:
            rows.append(mean_row(f"mean-n{n}-d{p:g}", cell))
    return rows


def run_dimacs_suite(cfg: SolverConfig, directory: Union[str, Path],
                     workers: int = 1) -> list[BenchRow]:
    """One row per ``*.clq`` file in ``directory``, sorted by file name."""
    paths = sorted(Path(directory).glob("*.clq"))
    return _run(_dimacs_task, [(p, cfg) for p in paths], workers)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(v) for v in asdict(row).values()])
    return buf.getvalue()


def parse_grid(text: str) -> list[tuple[int, float]]:
    """Parse ``"100:0.6,200:0.5"`` into ``[(100, 0.6), (200, 0.5)]``."""
    cells = []
    for item in text.split(","):
        n, _, p = item.strip().partition(":")
        if not p:
            raise ValueError(f"grid cell {item!r} is not of the form n:p")
        cells.append((int(n), float(p)))
    return cells
