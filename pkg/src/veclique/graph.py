"""Immutable undirected simple graphs with bitset adjacency.

Vertices are the integers ``0..n-1``. Row ``v`` of the adjacency is a Python
int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent, so pair queries
are a shift and a mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range vertex ids."""


@dataclass(frozen=True)
class EdgeDrops:
    """Input edges discarded while building a graph."""

    duplicates: int = 0
    self_loops: int = 0

    @property
    def total(self) -> int:
        return self.duplicates + self.self_loops


class Graph:
    """Undirected graph without loops or parallel edges.

    Build one with :func:`from_edges` or the ``complete``/``empty``
    shortcuts; instances are never mutated afterwards.
    """

    __slots__ = ("_n", "_rows", "_degrees", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        self._n = n
        self._rows = tuple(rows)
        self._degrees = tuple(r.bit_count() for r in self._rows)
        self._m = sum(self._degrees) // 2

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitsets, one per vertex."""
        return self._rows

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for graph with n={self._n}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return bits_to_list(self._rows[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return self._degrees[v]

    def max_degree(self) -> int:
        """Largest vertex degree; 0 for edgeless graphs and for ``n == 0``."""
        return max(self._degrees, default=0)

    def vertices_with_degree_at_least(self, d: int) -> tuple[int, ...]:
        """Ascending ids of every vertex whose degree is ``>= d``."""
        return tuple(v for v, deg in enumerate(self._degrees) if deg >= d)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, ascending."""
        out = []
        for u, row in enumerate(self._rows):
            out.extend((u, v) for v in bits_to_list(row >> (u + 1) << (u + 1)))
        return out

    def induced_degrees(self, t: Iterable[int]) -> list[int]:
        """Degree of each member of ``t`` inside the subgraph induced by ``t``."""
        members = list(t)
        mask = 0
        for v in members:
            self._check(v)
            mask |= 1 << v
        return [(self._rows[v] & mask).bit_count() for v in members]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self._m})"


def bits_to_list(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[Graph, EdgeDrops]:
    """Build a graph from an edge list.

    Duplicate pairs (in either orientation) and self-loops are dropped and
    counted rather than rejected.

    Raises:
        GraphError: if an endpoint is negative or ``>= n``. The message names
            the edge and its position in ``edges``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    dups = loops = 0
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            bad = v if 0 <= u < n else u
            raise GraphError(f"edge {i} ({u}, {v}): vertex {bad} out of range for n={n}")
        if u == v:
            loops += 1
        elif rows[u] >> v & 1:
            dups += 1
        else:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows), EdgeDrops(dups, loops)


@dataclass(frozen=True)
class Clique:
    """A vertex set claimed to induce a complete subgraph.

    ``members`` is kept ascending; use :func:`is_clique_subset` to check the
    claim against a particular graph.
    """

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.members)))
        if len(ordered) != len(self.members):
            raise GraphError(f"duplicate vertices in clique {self.members}")
        object.__setattr__(self, "members", ordered)

    @property
    def size(self) -> int:
        return len(self.members)

    def one_based(self) -> list[int]:
        return [v + 1 for v in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass
class ProbeCounter:
    """Tally of ISCLIQUE work: calls, adjacency probes and bound violations."""

    isclique_calls: int = 0
    adjacency_probes: int = 0
    probe_bound_violations: int = 0

    def record(self, size: int, probes: int) -> None:
        self.isclique_calls += 1
        self.adjacency_probes += probes
        if probes > size * (size - 1) // 2:
            self.probe_bound_violations += 1


def probe_pairs(rows: Sequence[int], t: Sequence[int]) -> tuple[bool, int]:
    """Pairwise completeness scan over ``t`` without validation.

    Returns ``(is_complete, pairs_probed)``; stops at the first missing edge.
    """
    size = len(t)
    probes = 0
    for i in range(size - 1):
        row = rows[t[i]]
        for j in range(i + 1, size):
            probes += 1
            if not row >> t[j] & 1:
                return False, probes
    return True, probes


def is_clique_subset(g: Graph, t: Sequence[int], counter: ProbeCounter | None = None) -> bool:
    """True iff ``t`` induces a complete subgraph of ``g``.

    Equivalent to asking that every member of ``t`` has induced degree
    ``len(t) - 1``, but checked pair by pair so that a missing edge stops the
    scan early. At most ``L*(L-1)/2`` pairs are probed for ``L = len(t)``.

    Raises:
        GraphError: if ``t`` is empty, has repeats, or names a vertex outside
            the graph.
    """
    size = len(t)
    if size == 0:
        raise GraphError("is_clique_subset needs at least one vertex")
    n = g.n
    for v in t:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for graph with n={n}")
    if len(set(t)) != size:
        raise GraphError(f"repeated vertex in {tuple(t)}")
    ok, probes = probe_pairs(g.rows, t)
    if counter is not None:
        counter.record(size, probes)
    return ok
