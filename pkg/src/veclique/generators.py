"""Seeded random graphs and the deterministic DIMACS benchmark families.

Random graphs use :class:`random.Random` (Mersenne Twister) seeded with the
spec's integer seed. Pairs ``(u, v)``, ``u < v``, are visited in
lexicographic order and each is kept when the next ``random()`` draw is
below ``p``, so a given ``(n, p, seed)`` always yields the same graph.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product

from .graph import Graph, from_edges


@dataclass(frozen=True)
class GnpSpec:
    n: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p}")
        if not isinstance(self.seed, int):
            raise TypeError("seed must be an int")


def gen_gnp(spec: GnpSpec) -> Graph:
    rng = random.Random(spec.seed)
    n, p = spec.n, spec.p
    rows = [0] * n
    draw = rng.random
    for u in range(n):
        for v in range(u + 1, n):
            if draw() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def _distance_graph(words: list[tuple[int, ...]], min_distance: int) -> Graph:
    edges = [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(words), 2)
        if sum(x != y for x, y in zip(a, b)) >= min_distance
    ]
    return from_edges(len(words), edges)[0]


def hamming_graph(bits: int, distance: int) -> Graph:
    """DIMACS ``hamming<bits>-<distance>``.

    Vertices are all binary words of length ``bits`` in counting order;
    two words are adjacent when they differ in at least ``distance`` places.
    """
    words = [tuple(w) for w in product((0, 1), repeat=bits)]
    return _distance_graph(words, distance)


def johnson_graph(n: int, weight: int, distance: int) -> Graph:
    """DIMACS ``johnson<n>-<weight>-<distance>``.

    Vertices are the binary words of length ``n`` with exactly ``weight``
    ones; adjacency is Hamming distance of at least ``distance``.
    """
    words = [
        tuple(1 if i in ones else 0 for i in range(n))
        for ones in combinations(range(n), weight)
    ]
    return _distance_graph(words, distance)


def c_fat_graph(n: int, c: float) -> Graph:
    """DIMACS ``c-fat<n>-<c>`` (Berman-Pelc c-fat rings).

    With ``k = floor(n / (c ln n))`` clusters, vertex ``v`` belongs to
    cluster ``v mod k``; vertices are adjacent when their clusters are equal
    or neighbours on the ring.
    """
    k = int(n // (c * math.log(n)))
    edges = []
    for u, v in combinations(range(n), 2):
        gap = (v - u) % k
        if gap in (0, 1, k - 1):
            edges.append((u, v))
    return from_edges(n, edges)[0]


def _affine_plane_lines() -> list[tuple[int, int, int]]:
    # Steiner triple system on 9 points: the 12 lines of AG(2, 3).
    pts = [(x, y) for x in range(3) for y in range(3)]
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for a, b in combinations(pts, 2):
        c = ((-a[0] - b[0]) % 3, (-a[1] - b[1]) % 3)
        lines.add(tuple(sorted((index[a], index[b], index[c]))))
    return sorted(lines)


def mann_a9_graph() -> Graph:
    """DIMACS ``MANN_a9``: clique form of the Steiner triple covering problem.

    One vertex per (triple, point-in-triple) incidence, 36 in all, then one
    vertex per point, 9 more. The complement joins the three incidences of a
    triple to each other and each incidence to its point's vertex; every
    other pair is an edge.
    """
    triples = _affine_plane_lines()
    n = 3 * len(triples) + 9
    point_vertex = {pt: 3 * len(triples) + pt for pt in range(9)}
    non_edges = set()
    for t, triple in enumerate(triples):
        ids = [3 * t + i for i in range(3)]
        non_edges.update(combinations(ids, 2))
        for vid, pt in zip(ids, triple):
            non_edges.add((vid, point_vertex[pt]))
    edges = [e for e in combinations(range(n), 2) if e not in non_edges]
    return from_edges(n, edges)[0]


# name -> (builder, vertex count, edge count and clique number as listed for
# the published instance)
DIMACS_FAMILIES = {
    "johnson8-2-4": (lambda: johnson_graph(8, 2, 4), 28, 210, 4),
    "johnson8-4-4": (lambda: johnson_graph(8, 4, 4), 70, 1855, 14),
    "hamming6-2": (lambda: hamming_graph(6, 2), 64, 1824, 32),
    "hamming6-4": (lambda: hamming_graph(6, 4), 64, 704, 4),
    "MANN_a9": (mann_a9_graph, 45, 918, 16),
    "c-fat200-1": (lambda: c_fat_graph(200, 1), 200, 1534, 12),
    "c-fat500-1": (lambda: c_fat_graph(500, 1), 500, 4459, 14),
}
