import random

import pytest
from hypothesis import given, settings, strategies as st

from graphwalk import (
    check_tiling,
    enumerate_graphs,
    signature_nonempty,
    star_nonempty,
    validate_graph,
)
from graphwalk.hardness import (
    SimpleGraph,
    brute_force_colourable,
    canonical_colored_graph,
    extract_coloring,
    gen_3col_signature,
    gen_universal_star_automaton,
    is_proper,
)

from helpers import LINE_PATH3, SIG_LINE, SIG_ODD, complete, cycle, random_connected

EDGE = SimpleGraph(["u", "v"], [("u", "v")])


def test_k3_signature_size_and_verdict():
    sig = gen_3col_signature(complete(3))
    assert len(sig.labels) == 3 * 3 + 3 * 6
    v = signature_nonempty(sig)
    c = extract_coloring(complete(3), v.witness)
    assert sorted(c.values()) == [1, 2, 3]


def test_k4_is_empty():
    assert not signature_nonempty(gen_3col_signature(complete(4)))


def test_single_edge_witness():
    v = signature_nonempty(gen_3col_signature(EDGE))
    assert len(v.witness) == 3
    c = extract_coloring(EDGE, v.witness)
    assert c["u"] != c["v"]


def test_odd_cycle_colourable_even_cycle_too():
    for n in (4, 5):
        G = cycle(n)
        assert is_proper(G, extract_coloring(G, signature_nonempty(gen_3col_signature(G)).witness))


def test_canonical_graph_round_trip():
    G = complete(3)
    c = {"v0": 1, "v1": 2, "v2": 3}
    g = canonical_colored_graph(G, c)
    assert len(g) == 6
    assert validate_graph(gen_3col_signature(G), g).ok
    assert extract_coloring(G, g) == c
    assert len(canonical_colored_graph(EDGE, {"u": 1, "v": 2})) == 3


def test_improper_colouring_rejected():
    with pytest.raises(ValueError):
        canonical_colored_graph(EDGE, {"u": 1, "v": 1})


def test_disconnected_input_rejected():
    G = SimpleGraph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(ValueError):
        gen_3col_signature(G)
    with pytest.raises(ValueError):
        SimpleGraph(["a"], [("a", "a")])


def test_edge_sig_graphs_are_the_six_colourings():
    # every graph over the single-edge signature is a coloured subdivision
    sig = gen_3col_signature(EDGE)
    graphs = list(enumerate_graphs(sig, 3))
    assert len(graphs) == 6
    assert {tuple(extract_coloring(EDGE, g).values()) for g in graphs} == {
        (i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j}


def test_universal_star_automaton():
    A = gen_universal_star_automaton(SIG_LINE)
    assert len(A.stars) == 3 and A.states == ("q",)
    assert check_tiling(SIG_LINE, A, LINE_PATH3, {v: "q" for v in LINE_PATH3.nodes})
    assert not star_nonempty(SIG_ODD, gen_universal_star_automaton(SIG_ODD))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_verdict_matches_brute_force(seed):
    rng = random.Random(seed)
    G = random_connected(rng, rng.randint(2, 6), rng.uniform(0.3, 0.9))
    v = signature_nonempty(gen_3col_signature(G))
    expected = brute_force_colourable(G)
    assert bool(v) == (expected is not None)
    if v:
        assert is_proper(G, extract_coloring(G, v.witness))
        assert len(v.witness) == len(G.vertices) + len(G.edges)
