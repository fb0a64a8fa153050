"""Exact reference solvers used to check the verification-elimination search."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Clique, Graph, GraphError, bits_to_list

BRUTE_FORCE_MAX_N = 25


@dataclass(frozen=True)
class OracleResult:
    clique: Clique
    work: int
    exact: bool = True

    @property
    def size(self) -> int:
        return self.clique.size


def brute_force_max_clique(g: Graph) -> OracleResult:
    """Maximum clique by checking every one of the ``2**n`` vertex subsets.

    Subset ``mask`` is a clique iff ``mask`` minus its top vertex ``v`` is a
    clique whose members all neighbour ``v``; numpy fills that table for all
    masks at once, a doubling step per vertex. Ties go to the
    lexicographically smallest sorted vertex tuple.

    Raises:
        GraphError: if ``g.n`` exceeds :data:`BRUTE_FORCE_MAX_N`.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force refused: n={n} exceeds the n <= {BRUTE_FORCE_MAX_N} guard")
    if n == 0:
        raise GraphError("graph has no vertices, hence no clique")
    total = 1 << n
    is_clique = np.zeros(total, dtype=bool)
    size = np.zeros(total, dtype=np.uint8)
    is_clique[0] = True
    for v in range(n):
        half = 1 << v
        lower = np.arange(half, dtype=np.int64)
        # members below v must all be neighbours of v
        outside = np.int64(~g.rows[v] & (half - 1))
        is_clique[half:2 * half] = is_clique[:half] & ((lower & outside) == 0)
        size[half:2 * half] = size[:half] + 1
    best = int(size[is_clique].max())
    masks = np.flatnonzero(is_clique & (size == best))
    winner = min(tuple(bits_to_list(int(mk))) for mk in masks)
    return OracleResult(Clique(winner), work=total)


def branch_and_bound_max_clique(g: Graph, time_budget: Optional[float] = None) -> OracleResult:
    """Carraghan-Pardalos style exact search.

    For ``v = 0, 1, ...`` look for the largest clique containing ``v`` among
    its higher-numbered neighbours, then drop ``v``. A branch is cut as soon
    as its depth plus remaining candidates cannot beat the best clique so far.
    With a ``time_budget`` (seconds) the search may stop early; the result is
    then flagged ``exact=False``.
    """
    n = g.n
    if n == 0:
        raise GraphError("graph has no vertices, hence no clique")
    rows = g.rows
    deadline = None if time_budget is None else time.monotonic() + time_budget
    best: list[int] = [0]
    nodes = 0
    exact = True
    full = (1 << n) - 1

    for v in range(n):
        later = full & ~((1 << (v + 1)) - 1)
        if 1 + (later & rows[v]).bit_count() <= len(best):
            continue
        chosen = [v]
        frontier = [later & rows[v]]
        while frontier:
            cand = frontier[-1]
            if len(chosen) + cand.bit_count() <= len(best):
                frontier.pop()
                chosen.pop()
                continue
            assert len(chosen) + cand.bit_count() > len(best)
            low = cand & -cand
            frontier[-1] = cand ^ low
            u = low.bit_length() - 1
            nodes += 1
            if deadline is not None and not nodes & 0x3FF and time.monotonic() > deadline:
                exact = False
                break
            chosen.append(u)
            nxt = (cand ^ low) & rows[u]
            if not nxt:
                if len(chosen) > len(best):
                    best = list(chosen)
                chosen.pop()
                continue
            frontier.append(nxt)
        if not exact:
            break
    return OracleResult(Clique(tuple(best)), work=nodes, exact=exact)
