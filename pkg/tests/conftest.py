import pytest

from whitehead.agraph import AGraph, PointedAGraph
from whitehead.words import parse_word

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def w(text):
    return parse_word(text)


# Vertex 0 is the one labelled 1 in the usual drawing.
@pytest.fixture
def gamma1():
    return AGraph(3, ((0, 1, 1), (0, 2, 2), (1, 1, 2), (2, 2, 1)), 2)


@pytest.fixture
def gamma2():
    # 0 = "1", 1 = "2" (base), 2 and 3 the unnamed core vertices
    return PointedAGraph(AGraph(4, ((1, 1, 0), (0, 1, 2), (2, 1, 3), (3, 2, 2), (0, 2, 3)), 2), 1)


@pytest.fixture
def gamma3():
    # 3 = "3" (base)
    return PointedAGraph(AGraph(4, ((0, 1, 1), (1, 2, 3), (0, 2, 2), (2, 2, 1), (1, 1, 2)), 2), 3)


@pytest.fixture
def six_vertex_graph():
    """The 6-vertex graph over a..e used for the hypergraph example (vertex k-1 is drawn as k)."""
    a, b, c, d, e = 1, 2, 3, 4, 5
    edges = ((0, a, 3), (0, b, 1), (1, d, 2), (4, c, 2), (4, d, 5),
             (2, e, 5), (3, a, 4), (1, c, 4), (4, a, 1))
    return AGraph(6, edges, 5)


@pytest.fixture
def h1_gens():
    return [w("aaB"), w("bbA")]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
