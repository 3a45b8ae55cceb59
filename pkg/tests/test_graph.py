import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowcover.graph import (
    CliquePartition,
    Graph,
    ParseError,
    complement,
    format_instance,
    graph_from_mask,
    is_two_clique_partition,
    parse_graph,
    parse_instance,
    recognize_two_cliques,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_parse_path():
    g = parse_graph("p fsc 3 2\ne 0 1\ne 1 2\n")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_empty_edge_set():
    g = parse_graph("p fsc 2 0")
    assert g.n == 2 and g.m == 0


def test_edge_order_irrelevant():
    assert parse_graph("p fsc 3 2\ne 2 1\ne 1 0\n") == parse_graph("p fsc 3 2\ne 0 1\ne 1 2\n")


@pytest.mark.parametrize("text, line, fragment", [
    ("p fsc 2 1\ne 0 0", 2, "self-loop"),
    ("p fsc 2 1\ne 0 2", 2, "out of range"),
    ("p fsc 3 2\ne 0 1\ne 1 0", 3, "duplicate edge"),
    ("p edge 3 0", 1, "header"),
    ("e 0 1\np fsc 2 1", 1, "before header"),
    ("p fsc 2 1\nc comment\ne 0 x", 3, "integers"),
    ("p fsc 2 0\nj 0 1 -1\nj 1 1 1", 2, "nonnegative"),
])
def test_parse_errors_name_line(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line
    assert fragment in str(exc.value)


def test_parse_job_times_and_comments():
    g, times = parse_instance("c hello\np fsc 2 1\nj 0 2 3\nj 1 4 5\ne 0 1\n")
    assert times == [(2, 3), (4, 5)] and g.edges == ((0, 1),)
    assert parse_instance("p fsc 2 0\n")[1] is None


def test_format_round_trip():
    g = Graph.from_edges(4, [(2, 3), (0, 1)])
    text = format_instance(g, [(1, 2), (3, 4), (5, 6), (7, 8)], comment="x")
    assert parse_instance(text) == (g, [(1, 2), (3, 4), (5, 6), (7, 8)])


def test_complement_examples(triangle):
    assert complement(triangle) == Graph.from_edges(3, [])
    assert complement(Graph.from_edges(4, [])).m == 6
    assert complement(Graph.from_edges(3, [(0, 1), (1, 2)])).edges == ((0, 2),)


@given(graphs())
def test_complement_involution_and_edge_count(g):
    c = complement(g)
    assert complement(c) == g
    assert g.m + c.m == g.n * (g.n - 1) // 2


@given(graphs())
def test_graph_invariants(g):
    assert sum(len(a) for a in g.adjacency) == 2 * g.m
    for u, v in g.edges:
        assert u < v and v in g.adjacency[u] and u in g.adjacency[v]


def test_recognize_examples(k4):
    k3k2 = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    assert recognize_two_cliques(k3k2) == CliquePartition(frozenset({0, 1, 2}), frozenset({3, 4}))
    assert recognize_two_cliques(Graph.from_edges(3, [(0, 1), (1, 2)])) is None
    assert recognize_two_cliques(k4) == CliquePartition(frozenset(range(4)), frozenset())


def test_recognize_side_a_holds_vertex_zero():
    g = Graph.from_edges(4, [(1, 2), (0, 3)])
    part = recognize_two_cliques(g)
    assert part.side_a == {0, 3} and part.side_b == {1, 2}


def test_recognize_three_components():
    assert recognize_two_cliques(Graph.from_edges(3, [])) is None


def _complete_bipartite_with(g, part):
    a, b = part.side_a, part.side_b
    want = {(min(u, v), max(u, v)) for u in a for v in b}
    return set(g.edges) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_recognition_matches_complement_characterization(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        part = recognize_two_cliques(g)
        c = complement(g)
        # any split of the vertices whose complement is complete bipartite
        splits = []
        for bits in range(1 << n):
            a = frozenset(v for v in range(n) if bits >> v & 1)
            b = frozenset(range(n)) - a
            if 0 in a and _complete_bipartite_with(c, CliquePartition(a, b)):
                splits.append(a)
        if part is None:
            assert not splits
        else:
            assert part.side_a in splits
            assert is_two_clique_partition(g, part)
