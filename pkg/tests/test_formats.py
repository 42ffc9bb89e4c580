import pytest
from hypothesis import given, strategies as st

from cyclehom.errors import FormatError
from cyclehom.formats import (format_coloring, format_dimacs, format_graph, format_hypergraph,
                              format_lists, format_metadata, parse_coloring, parse_dimacs,
                              parse_graph, parse_hypergraph, parse_lists, parse_metadata)
from cyclehom.lists import ListAssignment

from conftest import graphs


@given(graphs())
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g, ["a comment"])) == g


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 5\n", "2 2\n0 1\n", "x y\n", "2 1\n0 0\n"])
def test_bad_graphs(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_lists_round_trip_and_defaults():
    lists = ListAssignment.from_sets(5, [{1}, {1, 3}, range(1, 6)])
    text = format_lists(lists)
    assert "2:" not in text
    assert parse_lists(text, 3, 5) == lists


@pytest.mark.parametrize("text", ["0: 6\n", "4: 1\n", "0: 1\n0: 2\n", "0 1 2\n"])
def test_bad_lists(text):
    with pytest.raises(FormatError):
        parse_lists(text, 3, 5)


def test_coloring_round_trip():
    assert parse_coloring("SAT\n" + format_coloring([1, 2, 3])) == {0: 1, 1: 2, 2: 3}


@pytest.mark.parametrize("text", ["UNSAT\n", "v 0\n", "v 0 1\nv 0 2\n", "w 0 1\n"])
def test_bad_colorings(text):
    with pytest.raises(FormatError):
        parse_coloring(text)


def test_metadata_round_trip():
    meta = {"gadget": "chain", "d": 2, "claim": "outputs agree"}
    assert parse_metadata(format_metadata(meta)) == {k: str(v) for k, v in meta.items()}


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.lists(st.integers(1, n).flatmap(lambda x: st.sampled_from([x, -x])), min_size=1, max_size=3),
    max_size=5))))
def test_dimacs_round_trip(args):
    n, clauses = args
    assert parse_dimacs(format_dimacs(n, clauses)) == (n, [tuple(c) for c in clauses])


@pytest.mark.parametrize("text", ["1 2 0\n", "p cnf 1 1\n2 0\n", "p cnf 2 2\n1 0\n"])
def test_bad_dimacs(text):
    with pytest.raises(FormatError):
        parse_dimacs(text)


def test_hypergraph_round_trip():
    text = format_hypergraph(4, [(0, 1, 2), (1, 2, 3)], {0: 1, 3: 2})
    assert parse_hypergraph(text) == (4, [(0, 1, 2), (1, 2, 3)], {0: 1, 3: 2})
