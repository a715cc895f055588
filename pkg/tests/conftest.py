from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from partpoly import Graph
from partpoly.formats import parse_graph6

DATA = Path(__file__).parent / "data"

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def corpus(n: int) -> list[Graph]:
    """All nonisomorphic graphs on ``n`` vertices (n in 5, 6, 7), from the graph atlas."""
    return [parse_graph6(line) for line in (DATA / f"graphs{n}.g6").read_bytes().splitlines() if line]


def small_graphs(max_n: int) -> list[Graph]:
    """All nonisomorphic graphs with up to ``max_n`` vertices (every labeled graph for n <= 4)."""
    out = []
    for n in range(0, min(max_n, 4) + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            out.append(Graph(range(n), [e for i, e in enumerate(pairs) if bits >> i & 1]))
    for n in range(5, max_n + 1):
        out.extend(corpus(n))
    return out


def record_criterion(name: str, passed: bool, detail: str) -> None:
    _ACCEPTANCE[name] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
        passed, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name} {detail}")


@pytest.fixture(scope="session")
def graphs_upto6():
    return small_graphs(6)


@pytest.fixture(scope="session")
def graphs_upto7():
    return small_graphs(7)
