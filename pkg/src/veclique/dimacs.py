"""DIMACS ASCII clique format (``.clq``) reading and writing.

Accepted layout::

    c <comment>
    p edge <n> <m>      # also "p col <n> <m>" or "p <n> <m>"
    e <u> <v>           # 1-based endpoints

The declared edge count is advisory: the edges actually listed win and any
disagreement is recorded on the document.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Union

from .graph import Graph, from_edges

# Refuse absurd declared sizes instead of allocating for them.
MAX_VERTICES = 1 << 20
FORMAT_WORDS = ("edge", "col")


class DimacsError(ValueError):
    """A parse failure located at a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


@dataclass
class DimacsDocument:
    n: int
    m_declared: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    duplicates_dropped: int = 0
    self_loops_dropped: int = 0

    @property
    def m_actual(self) -> int:
        return len(self.edges) - self.duplicates_dropped - self.self_loops_dropped

    @property
    def edge_count_mismatch(self) -> bool:
        return self.m_actual != self.m_declared


def _count(tok: str, lineno: int, what: str) -> int:
    if not (tok.isascii() and tok.isdigit()):
        raise DimacsError(lineno, f"{what} {tok!r} is not a non-negative integer")
    return int(tok)


def _lines(text: Union[str, bytes]) -> Iterable[tuple[int, str]]:
    raw_lines = text.split(b"\n" if isinstance(text, bytes) else "\n")
    for lineno, raw in enumerate(raw_lines, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("ascii")
            except UnicodeDecodeError:
                raise DimacsError(lineno, "non-ASCII bytes") from None
        yield lineno, raw


def parse_dimacs(text: Union[str, bytes]) -> tuple[DimacsDocument, Graph]:
    """Parse DIMACS clique text into its document and 0-based graph.

    Raises:
        DimacsError: on a missing or repeated problem line, an edge before
            the problem line, an endpoint outside ``1..n``, undecodable bytes
            or any other malformed line.
    """
    doc = None
    comments: list[str] = []
    for lineno, raw in _lines(text):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            comments.append(raw.strip()[1:].strip())
        elif kind == "p":
            if doc is not None:
                raise DimacsError(lineno, "second problem line")
            args = tokens[1:]
            if args and args[0] in FORMAT_WORDS:
                args = args[1:]
            if len(args) != 2:
                raise DimacsError(lineno, "problem line must be 'p edge <n> <m>'")
            n = _count(args[0], lineno, "vertex count")
            if n > MAX_VERTICES:
                raise DimacsError(lineno, f"vertex count {n} exceeds limit {MAX_VERTICES}")
            doc = DimacsDocument(n=n, m_declared=_count(args[1], lineno, "edge count"))
        elif kind == "e":
            if doc is None:
                raise DimacsError(lineno, "edge before problem line")
            if len(tokens) != 3:
                raise DimacsError(lineno, "edge line must be 'e <u> <v>'")
            u = _count(tokens[1], lineno, "endpoint")
            v = _count(tokens[2], lineno, "endpoint")
            for x in (u, v):
                if not 1 <= x <= doc.n:
                    raise DimacsError(lineno, f"endpoint {x} outside 1..{doc.n}")
            doc.edges.append((u, v))
        else:
            raise DimacsError(lineno, f"unknown line type {kind[:20]!r}")
    if doc is None:
        raise DimacsError(0, "no problem line")
    doc.comments = comments
    graph, drops = from_edges(doc.n, ((u - 1, v - 1) for u, v in doc.edges))
    doc.duplicates_dropped = drops.duplicates
    doc.self_loops_dropped = drops.self_loops
    return doc, graph


def read_dimacs(path: Union[str, Path]) -> tuple[DimacsDocument, Graph]:
    return parse_dimacs(Path(path).read_bytes())


def write_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical DIMACS text for ``g``.

    Comments come first, then ``p edge n m``, then every edge once as
    ``e u v`` with ``u < v`` (1-based), in ascending order.
    """
    out = [f"c {c}".rstrip() for c in comments]
    out.append(f"p edge {g.n} {g.num_edges}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"
