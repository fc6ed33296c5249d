"""Shared fixtures and random instance generators for the test suite."""

from __future__ import annotations

import random

from graphwalk import (
    Graph,
    GraphWalkingAutomaton,
    Signature,
    Star,
    StarAutomaton,
    count_graphs,
    enumerate_graphs,
    node_count_bound,
)
from graphwalk.hardness import SimpleGraph

SIG_LOOP = Signature(["s"], {"s": "s"}, ["a0"], ["a0"], {"a0": ["s"]})
SIG_LINE = Signature(
    ["r", "l"], {"r": "l", "l": "r"}, ["a0", "a", "e"], ["a0"],
    {"a0": ["r"], "a": ["l", "r"], "e": ["l"]},
)
SIG_ODD = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0"], ["a0"], {"a0": ["r"]})

LOOP_GRAPH = Graph(["v0"], "v0", {"v0": "a0"}, {"v0": {"s": "v0"}})
LINE_PATH = Graph(["u", "v"], "u", {"u": "a0", "v": "e"}, {"u": {"r": "v"}, "v": {"l": "u"}})
LINE_PATH3 = Graph(
    ["u", "w", "v"], "u", {"u": "a0", "w": "a", "v": "e"},
    {"u": {"r": "w"}, "w": {"l": "u", "r": "v"}, "v": {"l": "w"}},
)

GWA_RIGHT = GraphWalkingAutomaton(
    ["q0"], "q0", [("q0", "e")], {("q0", "a0"): ("q0", "r"), ("q0", "a"): ("q0", "r")}
)
GWA_BOUNCE = GraphWalkingAutomaton(
    ["q0"], "q0", [],
    {("q0", "a0"): ("q0", "r"), ("q0", "e"): ("q0", "l"), ("q0", "a"): ("q0", "r")},
)


def universal_line() -> StarAutomaton:
    return StarAutomaton(["q"], [Star("a0", "q", ["q"]), Star("a", "q", ["q", "q"]),
                                 Star("e", "q", ["q"])])


# --- random signatures -----------------------------------------------------


def random_signature(rng: random.Random, max_labels: int = 4, max_dirs: int = 6,
                     p_empty_initial: float = 0.05) -> Signature:
    """Random well-formed signature: pairs ``dI``/``DI``, self-opposite ``sI``."""
    n_dirs = rng.randint(0, max_dirs)
    n_self = rng.randint(0, min(2, n_dirs))
    n_pairs = (n_dirs - n_self) // 2
    directions, opposite = [], {}
    for i in range(n_pairs):
        d, e = f"d{i}", f"D{i}"
        directions += [d, e]
        opposite[d], opposite[e] = e, d
    for i in range(n_self):
        directions.append(f"s{i}")
        opposite[f"s{i}"] = f"s{i}"
    rng.shuffle(directions)
    m = rng.randint(1, max_labels)
    labels = [f"x{i}" for i in range(m)]
    dol = {}
    for a in labels:
        k = rng.randint(1, len(directions)) if directions and rng.random() < 0.85 else 0
        dol[a] = rng.sample(directions, k)
    if rng.random() < p_empty_initial:
        initial = []
    else:
        initial = rng.sample(labels, rng.randint(1, max(1, m // 2)))
    return Signature(directions, opposite, labels, initial, dol)


def bounded_signatures(seed: int, count: int, max_bound: int = 12,
                       max_labels: int = 4, max_dirs: int = 6) -> list[Signature]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sig = random_signature(rng, max_labels, max_dirs)
        bound = node_count_bound(sig)
        # the one-node case is easy; keep only a few of them
        if bound > max_bound or (bound == 1 and rng.random() < 0.8):
            continue
        out.append(sig)
    return out


# --- random automata ---------------------------------------------------------


def random_star_automaton_for(rng: random.Random, sig: Signature, g: Graph,
                              n_states: int, extra: int) -> tuple[StarAutomaton, dict]:
    """Star automaton that tiles ``g`` by construction, plus noise stars."""
    states = [f"p{i}" for i in range(n_states)]
    t = {v: rng.choice(states) for v in g.nodes}
    stars = [Star(g.labels[v], t[v], [t[g.edges[v][d]] for d in sig.dirs(g.labels[v])])
             for v in g.nodes]
    for _ in range(extra):
        a = rng.choice(sig.labels)
        stars.append(Star(a, rng.choice(states), [rng.choice(states) for _ in sig.dirs(a)]))
    rng.shuffle(stars)
    return StarAutomaton(states, stars), t


def random_gwa(rng: random.Random, sig: Signature, n_states: int,
               p_accept: float = 0.25, p_move: float = 0.6) -> GraphWalkingAutomaton:
    states = [f"q{i}" for i in range(n_states)]
    accept, delta = [], {}
    for q in states:
        for a in sig.labels:
            x = rng.random()
            if x < p_accept:
                accept.append((q, a))
            elif x < p_accept + p_move and sig.dirs(a):
                delta[(q, a)] = (rng.choice(states), rng.choice(sig.dirs(a)))
    return GraphWalkingAutomaton(states, states[0], accept, delta)


def small_gwa_signatures(seed: int, count: int, max_graphs: int = 4000,
                         max_nodes: int = 8) -> list[Signature]:
    """Signatures with at most four directions whose graphs up to
    ``max_nodes`` nodes can be listed exhaustively."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sig = random_signature(rng, max_labels=3, max_dirs=4, p_empty_initial=0.0)
        if count_graphs(sig, max_nodes) <= max_graphs:
            out.append(sig)
    return out


def first_graphs(sig: Signature, max_nodes: int, limit: int) -> list[Graph]:
    out = []
    for g in enumerate_graphs(sig, max_nodes):
        out.append(g)
        if len(out) >= limit:
            break
    return out


# --- simple graphs -----------------------------------------------------------


def complete(n: int) -> SimpleGraph:
    vs = [f"v{i}" for i in range(n)]
    return SimpleGraph(vs, [(u, w) for i, u in enumerate(vs) for w in vs[i + 1:]])


def cycle(n: int) -> SimpleGraph:
    vs = [f"v{i}" for i in range(n)]
    return SimpleGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def k33() -> SimpleGraph:
    left, right = ["a1", "a2", "a3"], ["b1", "b2", "b3"]
    return SimpleGraph(left + right, [(u, w) for u in left for w in right])


def petersen() -> SimpleGraph:
    outer = [f"o{i}" for i in range(5)]
    inner = [f"i{i}" for i in range(5)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    return SimpleGraph(outer + inner, edges)


def induced(G: SimpleGraph, keep) -> SimpleGraph:
    keep = [v for v in G.vertices if v in set(keep)]
    return SimpleGraph(keep, [e for e in G.edges if e[0] in keep and e[1] in keep])


def random_connected(rng: random.Random, n: int, p: float) -> SimpleGraph:
    vs = [f"v{i}" for i in range(n)]
    while True:
        edges = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        G = SimpleGraph(vs, edges)
        if G.connected:
            return G
