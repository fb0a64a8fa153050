"""Maximum clique by verification and elimination.

The driver binary-searches the clique size between 0 and the maximum degree.
A probe at threshold ``mid`` keeps only vertices of degree ``>= mid`` (the
only ones that can sit in a clique of ``mid + 1`` vertices) and then looks
for a clique of that size among their combinations. A hit raises the lower
bound, a miss lowers the upper bound; the last clique found is the answer.
"""

from __future__ import annotations

import time
from itertools import combinations
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

from .graph import Clique, Graph, GraphError, ProbeCounter, probe_pairs


class Mode(str, Enum):
    NAIVE = "naive"
    PRUNED = "pruned"


class Status(str, Enum):
    EXACT = "exact"
    BUDGET_EXHAUSTED = "budget_exhausted"


class BudgetExhausted(Exception):
    """Raised inside a probe when the combination or time budget runs out."""


@dataclass(frozen=True)
class SolverConfig:
    """How a solve enumerates and when it gives up.

    ``combination_budget`` caps subsets examined over the whole solve (all
    probes together); ``time_budget`` is wall-clock seconds. ``None`` means
    unlimited for both.
    """

    mode: Mode = Mode.PRUNED
    combination_budget: Optional[int] = None
    time_budget: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.combination_budget is not None and self.combination_budget <= 0:
            raise ValueError("combination_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass
class SearchStats(ProbeCounter):
    iterations: int = 0
    combinations_enumerated: int = 0
    elapsed: float = 0.0
    mids: list[int] = field(default_factory=list)


@dataclass
class SearchState:
    lb: int
    ub: int
    mid: Optional[int] = None
    best_clique: Optional[Clique] = None

    @property
    def best_size(self) -> int:
        return 0 if self.best_clique is None else self.best_clique.size


@dataclass
class SolveResult:
    status: Status
    clique: Optional[Clique]
    stats: SearchStats

    @property
    def size(self) -> int:
        return 0 if self.clique is None else self.clique.size

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


class _Budget:
    __slots__ = ("limit", "deadline", "used")

    def __init__(self, cfg: SolverConfig):
        self.limit = cfg.combination_budget
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"combination budget {self.limit} exhausted")
        if self.deadline is not None and not self.used & 0x3FF and time.monotonic() > self.deadline:
            raise BudgetExhausted("time budget exhausted")


def next_combination(t: Sequence[int], k: int) -> Optional[tuple[int, ...]]:
    """Lexicographic successor of the increasing index tuple ``t`` over ``range(k)``.

    Returns ``None`` when ``t`` is already the last combination,
    ``(k-L, ..., k-1)``.

    >>> next_combination((0, 1), 4)
    (0, 2)
    >>> next_combination((1, 3), 4)
    (2, 3)
    >>> next_combination((2, 3), 4) is None
    True
    """
    size = len(t)
    i = size - 1
    while i >= 0 and t[i] == k - size + i:
        i -= 1
    if i < 0:
        return None
    head = t[i] + 1
    return (*t[:i], *range(head, head + size - i))


def _select_naive(g: Graph, s: Sequence[int], size: int, stats: SearchStats,
                  budget: _Budget) -> Optional[Clique]:
    # itertools.combinations walks the same lexicographic order as repeated
    # next_combination calls; the pair scan is probe_pairs, inlined.
    rows = g.rows
    bound = size * (size - 1) // 2
    probes = calls = over = 0
    found = None
    try:
        for t in combinations(s, size):
            budget.spend()
            calls += 1
            before = probes
            ok = True
            for i in range(size - 1):
                row = rows[t[i]]
                for j in range(i + 1, size):
                    probes += 1
                    if not row >> t[j] & 1:
                        ok = False
                        break
                if not ok:
                    break
            if probes - before > bound:
                over += 1
            if ok:
                found = Clique(t)
                break
    finally:
        stats.combinations_enumerated += calls
        stats.isclique_calls += calls
        stats.adjacency_probes += probes
        stats.probe_bound_violations += over
    return found


def _select_pruned(g: Graph, s: Sequence[int], size: int, stats: SearchStats,
                   budget: _Budget) -> Optional[Clique]:
    # Depth-first over prefixes in the same lexicographic order as the naive
    # scan. A prefix is extended only by later members of s adjacent to all
    # of it, and dropped once too few such members remain to reach `size`.
    rows = g.rows
    s_mask = 0
    for v in s:
        s_mask |= 1 << v
    chosen: list[int] = []
    frontier = [s_mask]
    while frontier:
        cand = frontier[-1]
        need = size - len(chosen)
        if cand.bit_count() < need:
            frontier.pop()
            if chosen:
                chosen.pop()
            continue
        low = cand & -cand
        cand ^= low
        frontier[-1] = cand
        v = low.bit_length() - 1
        budget.spend()
        stats.combinations_enumerated += 1
        chosen.append(v)
        if need == 1:
            ok, probes = probe_pairs(rows, chosen)
            stats.record(size, probes)
            if not ok:  # pragma: no cover - candidates are common neighbours
                raise AssertionError(f"pruned search produced non-clique {chosen}")
            return Clique(tuple(chosen))
        frontier.append(cand & rows[v])
    return None


def select_clique_of_size(g: Graph, s: Sequence[int], size: int,
                          cfg: SolverConfig = SolverConfig(),
                          stats: Optional[SearchStats] = None,
                          budget: Optional[_Budget] = None) -> Optional[Clique]:
    """First clique of ``size`` vertices among the combinations of ``s``.

    ``s`` must be ascending. Combinations are visited in lexicographic
    order and the first one that verifies is returned, so both modes give
    the same answer; pruned mode just skips prefixes that already contain a
    non-adjacent pair. Returns ``None`` if no combination is a clique.

    Raises:
        BudgetExhausted: if the budget runs out before the scan finishes.
    """
    if size < 1:
        raise GraphError(f"clique size must be at least 1, got {size}")
    if len(s) < size:
        raise GraphError(f"candidate set of {len(s)} vertices cannot hold {size}")
    if any(a >= b for a, b in zip(s, s[1:])):
        raise GraphError("candidate set must be strictly ascending")
    if stats is None:
        stats = SearchStats()
    if budget is None:
        budget = _Budget(cfg)
    if cfg.mode is Mode.NAIVE:
        return _select_naive(g, s, size, stats, budget)
    return _select_pruned(g, s, size, stats, budget)


def binary_search(state: SearchState, probe: Callable[[int], Optional[Clique]],
                  stats: Optional[SearchStats] = None) -> SearchState:
    """Run the lb/ub/mid loop on ``state`` until ``lb > ub``.

    ``probe(mid)`` must return a clique of ``mid + 1`` vertices or ``None``.
    The state is updated in place, so if ``probe`` raises, ``state`` still
    holds the best clique found so far.
    """
    while state.lb <= state.ub:
        mid = (state.lb + state.ub) // 2
        state.mid = mid
        if stats is not None:
            stats.iterations += 1
            stats.mids.append(mid)
        found = probe(mid)
        if found is not None:
            state.best_clique = found
            state.lb = mid + 1
        else:
            state.ub = mid - 1
    state.mid = None
    return state


def find_maximum_clique(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Find a maximum clique of ``g``.

    With no budget the result is always exact. When a budget trips the
    result carries the largest clique verified so far (or a single vertex if
    no probe had succeeded yet) with status ``budget_exhausted``.
    """
    stats = SearchStats()
    budget = _Budget(cfg)
    start = time.perf_counter()
    state = SearchState(lb=0, ub=g.max_degree())

    def probe(mid: int) -> Optional[Clique]:
        s = g.vertices_with_degree_at_least(mid)
        if len(s) > mid:
            return select_clique_of_size(g, s, mid + 1, cfg, stats, budget)
        return None

    status = Status.EXACT
    try:
        binary_search(state, probe, stats)
    except BudgetExhausted:
        status = Status.BUDGET_EXHAUSTED
    stats.elapsed = time.perf_counter() - start
    clique = state.best_clique
    if clique is None and status is Status.BUDGET_EXHAUSTED and g.n:
        clique = Clique((0,))
    return SolveResult(status, clique, stats)
