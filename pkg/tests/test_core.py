import random

from hypothesis import given, settings, strategies as st

from graphwalk import (
    Graph,
    Signature,
    enumerate_graphs,
    graphs_identical,
    is_balanced,
    label_counts,
    make_signature,
    validate_graph,
    validate_signature,
)
from graphwalk.core import relabel, tag, untag

from helpers import LINE_PATH, LINE_PATH3, LOOP_GRAPH, SIG_LINE, SIG_LOOP, random_signature


def test_sig_loop_is_valid():
    assert validate_signature(SIG_LOOP).ok


def test_sig_line_is_valid():
    assert validate_signature(SIG_LINE)


def test_non_involutive_opposite_reported():
    sig = Signature(["r", "l"], {"r": "r", "l": "r"}, ["a0"], ["a0"], {"a0": ["r"]})
    report = validate_signature(sig)
    assert not report.ok
    assert any("opposite not involution on 'l'" in v for v in report.violations)


def test_signature_violations_are_collected():
    sig = Signature(["r", "r", "x"], {"r": "r"}, ["a0", "a0"], ["zz"],
                    {"a0": ["r", "r", "y"]})
    v = " | ".join(validate_signature(sig).violations)
    for fragment in ("duplicate direction", "duplicate label", "opposite undefined on 'x'",
                     "'zz'", "unknown direction 'y'", "'r' twice"):
        assert fragment in v, fragment


def test_dirs_of_label_follow_global_order():
    sig = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a"], ["a"], {"a": ["l", "r"]})
    assert sig.dirs("a") == ("r", "l")


def test_make_signature_defaults():
    sig = make_signature(["r", "l"], {"r": "l", "l": "r"},
                         {"a0": ["r"], "a": ["l", "r"], "e": ["l"]}, ["a0"])
    assert sig == SIG_LINE


def test_loop_graph_valid():
    assert validate_graph(SIG_LOOP, LOOP_GRAPH).ok


def test_two_node_path_valid():
    assert validate_graph(SIG_LINE, LINE_PATH).ok


def test_second_initial_label_reported():
    g = Graph(["u", "v"], "u", {"u": "a0", "v": "a0"}, {"u": {"r": "v"}, "v": {"l": "u"}})
    report = validate_graph(SIG_LINE, g)
    assert any("non-initial node 'v' carries initial label 'a0'" in v
               for v in report.violations)


def test_asymmetric_edge_reported():
    g = Graph(["u", "w", "v"], "u", {"u": "a0", "w": "a", "v": "e"},
              {"u": {"r": "w"}, "w": {"l": "u", "r": "v"}, "v": {"l": "u"}})
    assert not validate_graph(SIG_LINE, g).ok


def test_missing_and_extra_directions_reported():
    g = Graph(["u"], "u", {"u": "a0"}, {"u": {"l": "u"}})
    text = " ".join(validate_graph(SIG_LINE, g).violations)
    assert "'r'" in text and "'l'" in text


def test_validation_is_pure():
    g = Graph(["u", "v"], "u", {"u": "a0", "v": "a0"}, {"u": {"r": "v"}, "v": {"l": "u"}})
    assert validate_graph(SIG_LINE, g) == validate_graph(SIG_LINE, g)


def test_label_counts_examples():
    assert label_counts(LOOP_GRAPH, SIG_LOOP) == {"a0": 1}
    assert label_counts(LINE_PATH, SIG_LINE) == {"a0": 1, "a": 0, "e": 1}
    assert label_counts(LINE_PATH3, SIG_LINE) == {"a0": 1, "a": 1, "e": 1}


def test_graphs_identical_is_by_identifier():
    assert graphs_identical(LINE_PATH, LINE_PATH)
    swapped = Graph(["v", "u"], "v", {"v": "a0", "u": "e"},
                    {"v": {"r": "u"}, "u": {"l": "v"}})
    assert not graphs_identical(LINE_PATH, swapped)
    assert LINE_PATH == Graph(["u", "v"], "u", {"u": "a0", "v": "e"},
                              {"u": {"r": "v"}, "v": {"l": "u"}})


def test_relabel_then_back_is_identity():
    g = relabel(LINE_PATH, lambda v, a: tag(a, v), lambda v, d, u: tag(d))
    back = relabel(g, lambda v, a: untag(a)[0], lambda v, d, u: untag(d)[0])
    assert back == LINE_PATH


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_random_signatures_validate(seed):
    assert validate_signature(random_signature(random.Random(seed))).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_valid_graphs_have_balanced_counts(seed):
    sig = random_signature(random.Random(seed), max_labels=3, max_dirs=4)
    for i, g in enumerate(enumerate_graphs(sig, 4)):
        if i > 50:
            break
        assert validate_graph(sig, g).ok
        for v in g.nodes:
            for d, u in g.edges[v].items():
                assert g.edges[u][sig.opposite[d]] == v
        assert is_balanced(sig, label_counts(g, sig))
