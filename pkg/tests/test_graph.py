import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipinterval.errors import InvalidArgument, ParseError
from bipinterval.graph import (BipartiteGraph, BiregularSignature, classify_biregular, complete_bipartite,
                               emit_graph, even_cycle, induced_subgraph, parse_graph, random_biregular)
from conftest import biregular_graphs, signatures, small_graphs


def test_complete_bipartite_examples():
    G = complete_bipartite(2, 2)
    assert G.num_edges == 4
    assert G.degrees("X") == [2, 2] and G.degrees("Y") == [2, 2]
    assert complete_bipartite(1, 1).edges == ((1, 1),)
    K = complete_bipartite(7, 3)
    assert K.num_edges == 21
    assert set(K.degrees("X")) == {3} and set(K.degrees("Y")) == {7}


@pytest.mark.parametrize("m, n", [(0, 1), (1, 0), (-1, 3)])
def test_complete_bipartite_rejects_empty_part(m, n):
    with pytest.raises(InvalidArgument):
        complete_bipartite(m, n)


def test_even_cycle():
    assert even_cycle(3).edges == ((1, 1), (1, 2), (2, 2), (2, 3), (3, 1), (3, 3))
    assert even_cycle(2) == complete_bipartite(2, 2)
    assert classify_biregular(even_cycle(5)).as_tuple() == (5, 2, 5, 2)
    with pytest.raises(InvalidArgument):
        even_cycle(1)


def test_random_biregular_examples():
    G = random_biregular(BiregularSignature(3, 2, 3, 2), 1)
    assert classify_biregular(G).as_tuple() == (3, 2, 3, 2)
    H = random_biregular(BiregularSignature(4, 3, 4, 3), 0)
    assert set(H.degrees("X")) == {3} == set(H.degrees("Y"))
    with pytest.raises(InvalidArgument):
        random_biregular(BiregularSignature(4, 3, 2, 6), 0)  # l > n


def test_random_biregular_is_seed_deterministic():
    sig = BiregularSignature(12, 3, 9, 4)
    assert random_biregular(sig, 42) == random_biregular(sig, 42)
    assert random_biregular(sig, 42).edges != random_biregular(sig, 43).edges


def test_signature_must_be_in_class():
    with pytest.raises(InvalidArgument):
        BiregularSignature(2, 3, 3, 2)  # m < n
    with pytest.raises(InvalidArgument):
        BiregularSignature(4, 1, 2, 3)  # m*l != n*k


def test_classify():
    assert classify_biregular(complete_bipartite(7, 3)).as_tuple() == (7, 3, 3, 7)
    assert classify_biregular(even_cycle(3)).as_tuple() == (3, 2, 3, 2)
    path = BipartiteGraph.from_edges(2, 2, [(1, 1), (1, 2), (2, 1)])
    assert classify_biregular(path) is None
    swapped = classify_biregular(complete_bipartite(2, 5))
    assert swapped.as_tuple() == (5, 2, 2, 5) and swapped.transposed


def test_induced_subgraph():
    G = even_cycle(3)
    sub = induced_subgraph(G, [1, 2], [1, 2, 3])
    assert sub.graph.num_edges == 4
    assert {sub.lift_edge(e) for e in sub.graph.edges} == {(1, 1), (1, 2), (2, 2), (2, 3)}
    assert induced_subgraph(G, range(1, 4), range(1, 4)).graph == G
    empty = induced_subgraph(G, [], [])
    assert empty.graph.num_edges == 0
    with pytest.raises(InvalidArgument):
        induced_subgraph(G, [4], [])


def test_parse_and_emit():
    G = parse_graph("bipartite 1 1 1\ne 1 1\n")
    assert G.edges == ((1, 1),)
    text = emit_graph(complete_bipartite(2, 2))
    assert text.splitlines() == ["bipartite 2 2 4", "e 1 1", "e 1 2", "e 2 1", "e 2 2"]
    assert parse_graph("# comment\nbipartite 2 2 2\ne 2 1\n\ne 1 2\n").edges == ((1, 2), (2, 1))


@pytest.mark.parametrize("text, line", [
    ("bipartite 2 2 1\ne 3 1\n", 2),
    ("bipartite 2 2 2\ne 1 1\ne 1 1\n", 3),
    ("graph 2 2 0\n", 1),
    ("bipartite 2 2 2\ne 1 1\n", 2),
    ("bipartite 2 x 0\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


@given(signatures(), st.integers(0, 2**64 - 1))
def test_generator_hits_signature(sig, seed):
    G = random_biregular(sig, seed)
    assert classify_biregular(G) == sig


@given(small_graphs(max_side=6))
def test_degree_sums_and_roundtrip(G):
    assert sum(G.degrees("X")) == sum(G.degrees("Y")) == G.num_edges
    assert parse_graph(emit_graph(G)) == G


@given(biregular_graphs())
def test_roundtrip_generated(G):
    assert parse_graph(emit_graph(G)) == G


@given(st.integers(0, 10**6))
def test_random_signature_feasible(seed):
    import random

    from bipinterval.graph import random_signature

    sig = random_signature(random.Random(seed), max_m=20, max_l=5)
    assert sig.m <= 20 and sig.l <= 5 and sig.l <= sig.n and sig.k <= sig.m


@given(st.integers(1, 5), st.integers(1, 12), st.integers(0, 12), st.integers(0, 2**32))
def test_random_x_uniform(r, m, extra, seed):
    from bipinterval.graph import random_x_uniform

    n = max(m, r) + extra
    G = random_x_uniform(m, n, r, seed)
    assert set(G.degrees("X")) == {r}
    assert max(G.degrees("Y")) <= r
    assert G == random_x_uniform(m, n, r, seed)
