import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipinterval.coloring import (EdgeColoring, chromatic_index_biregular, emit_coloring, is_interval_at,
                                  is_interval_on, is_interval_set, is_persistent_interval_at, is_proper,
                                  parse_coloring, spectrum, verify)
from bipinterval.constructions import max_coloring, theorem3_coloring
from bipinterval.errors import InvalidArgument, ParseError
from bipinterval.graph import BipartiteGraph, complete_bipartite, even_cycle
from conftest import biregular_graphs, small_graphs

K22_PHI = EdgeColoring(2, {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 1})


def test_spectrum(k22):
    assert spectrum(k22, K22_PHI, ("X", 1)) == [1, 2]
    assert spectrum(k22, K22_PHI, ("Y", 2)) == [1, 2]
    edge = BipartiteGraph.from_edges(1, 1, [(1, 1)])
    assert spectrum(edge, EdgeColoring(1, {(1, 1): 1}), ("X", 1)) == [1]
    with pytest.raises(InvalidArgument):
        spectrum(k22, K22_PHI, ("X", 3))


def test_is_proper(k22):
    assert is_proper(k22, K22_PHI).passed
    clash = EdgeColoring(2, {(1, 1): 1, (1, 2): 1, (2, 1): 2, (2, 2): 2})
    report = is_proper(k22, clash)
    assert not report.passed
    assert any(c.name == "proper" and "x1y1 and x1y2" in c.witness for c in report.failures)
    short = EdgeColoring(3, {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 1})
    (fail,) = is_proper(k22, short).failures
    assert fail.name == "surjective" and fail.witness == "color 3 unused"


def test_interval_predicates():
    assert is_interval_set([2, 3, 4])
    assert not is_interval_set([1, 3])
    assert not is_interval_set([])
    star = BipartiteGraph.from_edges(1, 3, [(1, 1), (1, 2), (1, 3)])
    v = ("X", 1)
    assert is_persistent_interval_at(star, EdgeColoring(3, {(1, 1): 1, (1, 2): 3, (1, 3): 2}), v)
    shifted = EdgeColoring(4, {(1, 1): 2, (1, 2): 3, (1, 3): 4})
    assert is_interval_at(star, shifted, v) and not is_persistent_interval_at(star, shifted, v)
    single = BipartiteGraph.from_edges(1, 1, [(1, 1)])
    assert is_persistent_interval_at(single, EdgeColoring(1, {(1, 1): 1}), v)


def test_construction_output_is_interval_on_x():
    G = even_cycle(3)
    phi = theorem3_coloring(G)
    assert is_interval_on(G, phi, G.vertices("X"))


def test_verify_reports_tamper_at_y():
    G = even_cycle(5)
    phi = theorem3_coloring(G)
    # x5y1 lives in the top window; copy the color of x1y1 onto it to clash at y1
    colors = dict(phi.colors)
    colors[(5, 1)] = colors[(1, 1)]
    colors[(5, 5)] = 6 if colors[(1, 1)] != 6 else 5
    bad = EdgeColoring(phi.t, colors)
    report = verify(G, bad, "X")
    assert not report.passed
    assert any("x1y1 and x5y1" in str(c.witness) for c in report.failures)


def test_verify_persistent_mode():
    G = complete_bipartite(2, 2)
    phi = EdgeColoring(4, {(1, 1): 3, (1, 2): 4, (2, 1): 4, (2, 2): 3})
    # colors 1, 2 unused: surjectivity fails as well, so check the mode-specific entries
    report = verify(G, phi, "X", "persistent")
    names = {c.name: c.ok for c in report.checks}
    assert names["interval on X"] and not names["persistent on X"]
    assert not verify(G, phi, "X", "interval").passed


def test_chromatic_index_biregular():
    assert chromatic_index_biregular(complete_bipartite(7, 3)) == 7
    assert chromatic_index_biregular(even_cycle(3)) == 2
    k, phi = chromatic_index_biregular(complete_bipartite(1, 1), witness=True)
    assert k == 1 and phi.t == 1
    with pytest.raises(InvalidArgument):
        chromatic_index_biregular(BipartiteGraph.from_edges(2, 2, [(1, 1), (1, 2), (2, 1)]))


def test_coloring_file_roundtrip(k22):
    assert parse_coloring(emit_coloring(K22_PHI), k22) == K22_PHI


@pytest.mark.parametrize("text", [
    "coloring 2\nc 1 1 1\nc 1 2 2\nc 2 1 2\nc 3 2 1\n",  # edge not in graph
    "coloring 2\nc 1 1 1\nc 1 1 2\nc 2 1 2\nc 2 2 1\n",  # duplicate line
    "coloring 2\nc 1 1 1\nc 1 2 3\nc 2 1 2\nc 2 2 1\n",  # color out of range
    "coloring 2\nc 1 1 1\nc 1 2 2\nc 2 1 2\n",  # missing edge
    "c 1 1 1\n",
])
def test_coloring_parse_errors(text, k22):
    with pytest.raises(ParseError):
        parse_coloring(text, k22)


@given(small_graphs(max_side=5), st.sampled_from("XY"))
def test_spectrum_size_bounded_by_degree(G, side):
    phi = max_coloring(G, side)
    for v in G.vertices("X") + G.vertices("Y"):
        assert len(spectrum(G, phi, v)) == G.degree(v)


@given(small_graphs(max_side=4), st.data())
def test_spectrum_collapse_only_when_improper(G, data):
    t = data.draw(st.integers(1, G.num_edges))
    colors = {e: data.draw(st.integers(1, t)) for e in G.edges}
    phi = EdgeColoring(t, colors)
    proper = next(c for c in is_proper(G, phi).checks if c.name == "proper").ok
    for v in G.vertices("X") + G.vertices("Y"):
        size = len(spectrum(G, phi, v))
        assert size <= G.degree(v)
        if proper:
            assert size == G.degree(v)
    for v in G.vertices("X"):
        if G.degree(v) and is_persistent_interval_at(G, phi, v):
            assert is_interval_at(G, phi, v)


@given(biregular_graphs(), st.randoms(use_true_random=False))
def test_verify_invariant_under_y_relabelling(G, rnd):
    phi = theorem3_coloring(G)
    perm = list(range(1, G.n + 1))
    rnd.shuffle(perm)
    relabel = {y: perm[y - 1] for y in range(1, G.n + 1)}
    H = BipartiteGraph.from_edges(G.m, G.n, [(x, relabel[y]) for x, y in G.edges])
    psi = EdgeColoring(phi.t, {(x, relabel[y]): c for (x, y), c in phi.colors.items()})
    assert verify(H, psi, "X").passed == verify(G, phi, "X").passed is True


@given(biregular_graphs())
def test_proper_k_coloring_is_persistent_on_degree_k_side(G):
    k, phi = chromatic_index_biregular(G, witness=True)
    assert phi.t == k
    assert verify(G, phi, "Y", "persistent").passed
