import itertools

import pytest

from flowcover.graph import Graph


def brute_matching_size(g: Graph) -> int:
    """Largest set of pairwise disjoint edges, by trying subsets largest first."""
    for k in range(min(g.m, g.n // 2), 0, -1):
        for combo in itertools.combinations(g.edges, k):
            verts = [v for e in combo for v in e]
            if len(set(verts)) == len(verts):
                return k
    return 0


def make(n, edges):
    return Graph.from_edges(n, edges)


@pytest.fixture
def triangle():
    return make(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k13():
    return make(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return make(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> bool:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
