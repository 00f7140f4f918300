import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from cyclerev.digraph import Digraph

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture
def c3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


@st.composite
def tournaments(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Digraph(n, [(j, i) if b else (i, j) for (i, j), b in zip(pairs, bits)])


@st.composite
def digraphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    states = draw(st.lists(st.sampled_from((0, 1, 2)), min_size=len(pairs), max_size=len(pairs)))
    arcs = [(i, j) if s == 1 else (j, i) for (i, j), s in zip(pairs, states) if s]
    return Digraph(n, arcs)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  criterion {name}")
