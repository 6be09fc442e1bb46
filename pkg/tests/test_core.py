import io
import itertools

import pytest
from hypothesis import given, strategies as st

from queuelab.core import (
    GraphFormatError,
    LabelledGraph,
    OrderedEdge,
    OrderedGraph,
    are_nested,
    format_graph,
    is_nested,
    normalize_edge,
    parse_graph,
    read_graph,
    reverse_graph,
    write_graph,
)


@pytest.mark.parametrize("u, v, expected", [((3), 1, (1, 3)), (2, 2, (2, 2)), (1, 4, (1, 4))])
def test_normalize_edge(u, v, expected):
    assert normalize_edge(u, v) == expected


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        normalize_edge(0, 2)


@pytest.mark.parametrize(
    "e, f, expected",
    [((1, 4), (2, 3), True), ((1, 3), (1, 2), False), ((1, 3), (2, 2), True), ((2, 3), (1, 4), False)],
)
def test_is_nested(e, f, expected):
    assert is_nested(OrderedEdge(*e), OrderedEdge(*f)) is expected


def test_nesting_wrapper_symmetric_irreflexive():
    edges = [OrderedEdge(u, v) for u in range(1, 7) for v in range(u, 7)]
    for e in edges:
        assert not is_nested(e, e)
        for f in edges:
            assert are_nested(e, f) == are_nested(f, e)


def test_nesting_reversal_invariant():
    n = 6
    edges = [OrderedEdge(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
    rev = lambda e: normalize_edge(n + 1 - e.right, n + 1 - e.left)
    for e, f in itertools.product(edges, repeat=2):
        assert is_nested(e, f) == is_nested(rev(e), rev(f))


def test_parse_ordered():
    g = parse_graph("3\n1 2\n2 3\n")
    assert g == OrderedGraph(3, [(1, 2), (2, 3)])


def test_parse_comments_blank_lines_and_reversed_pairs():
    g = parse_graph("# header\n\n4\n3 1\n# mid\n2 2\n")
    assert g.edges == (OrderedEdge(1, 3), OrderedEdge(2, 2))


def test_loop_rejected_in_simple_labelled():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("2\n1 1\n", kind="labelled", simple=True)
    assert exc.value.line == 2


def test_loop_allowed_in_non_simple_labelled():
    g = parse_graph("2\n1 1\n", kind="labelled", simple=False)
    assert g.degree(1) == 2


def test_duplicate_after_normalization():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("2\n1 2\n2 1\n")
    assert exc.value.line == 3


@pytest.mark.parametrize("text", ["", "x\n", "3\n1\n", "3\n1 4\n", "3\n1 2 3\n", "-1\n"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_constructor_validation():
    with pytest.raises(ValueError):
        OrderedGraph(2, [(1, 3)])
    with pytest.raises(ValueError):
        OrderedGraph(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        LabelledGraph(3, [(2, 2)])


def test_edges_are_canonically_sorted():
    g = OrderedGraph(4, [(3, 4), (1, 4), (2, 2), (1, 2)])
    assert g.edges == ((1, 2), (1, 4), (2, 2), (3, 4))


def test_read_and_write_file(tmp_path):
    p = tmp_path / "g.txt"
    g = OrderedGraph(5, [(5, 1), (2, 3)])
    write_graph(g, p)
    assert read_graph(p) == g
    assert read_graph(io.StringIO(p.read_text())) == g


def test_labelled_degrees_and_relabel():
    g = LabelledGraph(4, [(1, 2), (2, 3), (3, 4)])
    assert g.degrees() == [1, 2, 2, 1]
    assert not g.is_regular(2)
    h = g.relabel([2, 4, 1, 3])
    # positions: 2->1, 4->2, 1->3, 3->4
    assert h.edges == ((1, 3), (1, 4), (2, 4))


def test_reverse_graph():
    g = OrderedGraph(4, [(1, 2), (3, 3)])
    assert reverse_graph(g).edges == ((2, 2), (3, 4))


edge_lists = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).map(lambda p: normalize_edge(*p)), max_size=20),
    )
)


@given(edge_lists)
def test_serialize_roundtrip_is_canonical(data):
    n, edges = data
    g = OrderedGraph(n, edges)
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text
    shuffled = "\n".join([str(n)] + [f"{v} {u}" for u, v in reversed(g.edges)]) + "\n"
    assert format_graph(parse_graph(shuffled)) == text
