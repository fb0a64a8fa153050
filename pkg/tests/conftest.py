from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from veclique import Graph, from_edges

ROOT = Path(__file__).resolve().parent.parent
DIMACS_DIR = ROOT / "benchmarks" / "dimacs"

# Lines collected by test_acceptance and echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def graph(n: int, *edges: tuple[int, int]) -> Graph:
    return from_edges(n, edges)[0]


def cycle(n: int) -> Graph:
    return graph(n, *((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return graph(n, *((i, i + 1) for i in range(n - 1)))


def complete_minus(n: int, u: int, v: int) -> Graph:
    return graph(n, *((a, b) for a in range(n) for b in range(a + 1, n) if (a, b) != (u, v)))


@st.composite
def graphs(draw, max_n: int = 12, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, k in zip(pairs, keep) if k])[0]


@pytest.fixture
def k3() -> Graph:
    return Graph.complete(3)
