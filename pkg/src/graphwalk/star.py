"""Star automata: graphs accepted by tiling them with local neighbourhoods.

A star ``(a, q, q1, ..., qk)`` allows a node labelled ``a`` to carry state
``q`` while its neighbours along the directions of ``a`` (in signature
order) carry ``q1..qk``.  A graph is accepted when states can be placed on
all nodes so that every node sees one of the automaton's stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Graph, Signature, ValidationReport, relabel, tag, untag
from .solver import DEFAULT_MAX_STATES, Verdict, signature_nonempty

TilingAssignment = Mapping[str, str]


@dataclass(frozen=True)
class Star:
    label: str
    centre: str
    rays: tuple[str, ...]

    def __init__(self, label: str, centre: str, rays: Iterable[str]):
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "centre", centre)
        object.__setattr__(self, "rays", tuple(rays))


@dataclass(frozen=True)
class StarAutomaton:
    states: tuple[str, ...]
    stars: tuple[Star, ...]

    def __init__(self, states: Iterable[str], stars: Iterable[Star]):
        object.__setattr__(self, "states", tuple(states))
        # a set of stars; duplicates are dropped, first occurrence fixes order
        object.__setattr__(self, "stars", tuple(dict.fromkeys(stars)))

    def by_label(self) -> dict[str, list[Star]]:
        out: dict[str, list[Star]] = {}
        for t in self.stars:
            out.setdefault(t.label, []).append(t)
        return out


def validate_star_automaton(sig: Signature, A: StarAutomaton) -> ValidationReport:
    out = []
    states = set(A.states)
    if len(states) != len(A.states):
        out.append("duplicate states")
    for t in A.stars:
        if t.label not in sig.label_index:
            out.append(f"star {t} uses unknown label {t.label!r}")
            continue
        if len(t.rays) != len(sig.dirs(t.label)):
            out.append(
                f"star {t} has {len(t.rays)} rays but label {t.label!r} "
                f"has {len(sig.dirs(t.label))} directions"
            )
        for q in (t.centre, *t.rays):
            if q not in states:
                out.append(f"star {t} uses unknown state {q!r}")
    return ValidationReport(tuple(out))


def induced_star(sig: Signature, g: Graph, t: TilingAssignment, v: str) -> Star:
    a = g.labels[v]
    return Star(a, t[v], (t[g.edges[v][d]] for d in sig.dirs(a)))


def check_tiling(sig: Signature, A: StarAutomaton, g: Graph, t: TilingAssignment) -> bool:
    stars = set(A.stars)
    return all(v in t for v in g.nodes) and all(
        induced_star(sig, g, t, v) in stars for v in g.nodes
    )


def find_tiling(sig: Signature, A: StarAutomaton, g: Graph) -> dict[str, str] | None:
    """First tiling in (node order, state order), by backtracking.

    After each assignment the node and its neighbours are checked for a
    star still compatible with the states fixed so far.  A loop makes a
    node its own neighbour, so its ray reads the node's own state.
    """
    by_label = A.by_label()
    assign: dict[str, str] = {}
    touch = {v: {v, *g.edges[v].values()} for v in g.nodes}

    def compatible(w):
        a = g.labels[w]
        c = assign.get(w)
        rays = [assign.get(g.edges[w][d]) for d in sig.dirs(a)]
        for s in by_label.get(a, ()):
            if c is not None and s.centre != c:
                continue
            if all(r is None or r == sr for r, sr in zip(rays, s.rays)):
                return True
        return False

    nodes = g.nodes

    def rec(i):
        if i == len(nodes):
            return True
        v = nodes[i]
        for q in A.states:
            assign[v] = q
            if all(compatible(w) for w in touch[v]) and rec(i + 1):
                return True
        del assign[v]
        return False

    if not rec(0):
        return None
    return {v: assign[v] for v in nodes}


# --- reduction to a signature -----------------------------------------


def star_label_id(t: Star) -> str:
    return tag(t.label, t.centre, list(t.rays))


def _end_id(d: str, here: str, there: str) -> str:
    return tag(d, here, there)


def reduce_star_to_signature(sig: Signature, A: StarAutomaton) -> Signature:
    """Signature whose graphs are exactly the tiled graphs of ``A``.

    Labels are the stars; a direction ``(d, p, q)`` says that the old
    direction ``d`` leaves a node in state ``p`` towards a node in state
    ``q``.  Only directions used by some star (and their opposites) are
    listed.
    """
    sidx = {q: i for i, q in enumerate(A.states)}
    labels, initial, dirs_of_label = [], [], {}
    used = {}
    for t in A.stars:
        lab = star_label_id(t)
        labels.append(lab)
        if sig.is_initial(t.label):
            initial.append(lab)
        ends = []
        for d, q in zip(sig.dirs(t.label), t.rays):
            used[(d, t.centre, q)] = None
            used[(sig.opposite[d], q, t.centre)] = None
            ends.append(_end_id(d, t.centre, q))
        dirs_of_label[lab] = ends
    keys = sorted(used, key=lambda e: (sig.direction_index[e[0]], sidx[e[1]], sidx[e[2]]))
    directions = [_end_id(*e) for e in keys]
    opposite = {_end_id(d, p, q): _end_id(sig.opposite[d], q, p) for d, p, q in keys}
    return Signature(directions, opposite, labels, initial, dirs_of_label)


def encode_tiling(sig: Signature, A: StarAutomaton, g: Graph, t: TilingAssignment) -> Graph:
    if not check_tiling(sig, A, g, t):
        raise ValueError("assignment is not a tiling of the graph")
    return relabel(
        g,
        lambda v, a: star_label_id(induced_star(sig, g, t, v)),
        lambda v, d, u: _end_id(d, t[v], t[u]),
    )


def decode_tiling(gp: Graph) -> tuple[Graph, dict[str, str]]:
    g = relabel(gp, lambda v, a: untag(a)[0], lambda v, d, u: untag(d)[0])
    return g, {v: untag(gp.labels[v])[1] for v in gp.nodes}


def star_nonempty(sig: Signature, A: StarAutomaton, method: str = "auto",
                  max_states: int = DEFAULT_MAX_STATES) -> Verdict:
    reduced = reduce_star_to_signature(sig, A)
    verdict = signature_nonempty(reduced, method=method, max_states=max_states)
    if not verdict:
        return Verdict(False)
    g, t = decode_tiling(verdict.witness)
    assert check_tiling(sig, A, g, t), "decoded witness is not tiled"
    return Verdict(True, witness=g, vector=verdict.vector, tiling=t,
                   annotated=verdict.witness)


def star_bound(sig: Signature, A: StarAutomaton) -> int | None:
    """``s * n^2 * k^(k n^2 - 1)``, or None outside its hypotheses
    (fewer than two directions, or a label without directions)."""
    k = len(sig.directions)
    if k < 2 or any(not sig.dirs(a) for a in sig.labels):
        return None
    s = len(A.stars)
    n = len(A.states)
    return s * n**2 * k ** (k * n**2 - 1)
