"""Graph 3-colourability as signature non-emptiness.

For a connected simple graph, every vertex ``u`` gets three labels
``(u, i)`` and every edge ``{u, v}`` gets one label per pair of distinct
colours.  A vertex node must connect, for each neighbour ``v``, to an
edge node through direction ``+(u, i, v)``; an edge node accepts exactly
one such link from each side.  Graphs over this signature are the edge
subdivisions of the input graph with a proper colouring written on them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..core import Graph, Signature, tag, untag

COLOURS = (1, 2, 3)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]]):
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        norm = []
        seen = set()
        for e in edges:
            u, v = tuple(e)
            if u not in pos or v not in pos:
                raise ValueError(f"edge {(u, v)} uses an unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if pos[u] > pos[v]:
                u, v = v, u
            if (u, v) not in seen:
                seen.add((u, v))
                norm.append((u, v))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(norm))

    def neighbours(self, u: str) -> list[str]:
        out = [w for a, b in self.edges for x, w in ((a, b), (b, a)) if x == u]
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sorted(out, key=pos.get)

    @property
    def connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            u = todo.pop()
            for w in self.neighbours(u):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)


def vertex_label(u: str, i: int) -> str:
    return tag(u, i)


def edge_label(u: str, i: int, v: str, j: int) -> str:
    return tag([u, i], [v, j])


def link(sign: str, u: str, i: int, v: str) -> str:
    return tag(sign, u, i, v)


def gen_3col_signature(G: SimpleGraph) -> Signature:
    if not G.connected:
        raise ValueError("graph must be connected and non-empty")
    directions, opposite = [], {}
    dirs_of_label = {}
    for u in G.vertices:
        for i in COLOURS:
            for v in G.neighbours(u):
                plus, minus = link("+", u, i, v), link("-", u, i, v)
                directions += [plus, minus]
                opposite[plus], opposite[minus] = minus, plus
    for u in G.vertices:
        for i in COLOURS:
            dirs_of_label[vertex_label(u, i)] = [
                link("+", u, i, v) for v in G.neighbours(u)
            ]
    for u, v in G.edges:
        for i in COLOURS:
            for j in COLOURS:
                if i != j:
                    dirs_of_label[edge_label(u, i, v, j)] = [
                        link("-", u, i, v),
                        link("-", v, j, u),
                    ]
    v0 = G.vertices[0]
    initial = [vertex_label(v0, i) for i in COLOURS]
    return Signature(directions, opposite, list(dirs_of_label), initial, dirs_of_label)


def is_proper(G: SimpleGraph, c: Mapping[str, int]) -> bool:
    return all(c.get(v) in COLOURS for v in G.vertices) and all(
        c[u] != c[v] for u, v in G.edges
    )


def extract_coloring(G: SimpleGraph, witness: Graph) -> dict[str, int]:
    """Read the colour of each vertex off a graph over the signature."""
    colour: dict[str, int] = {}
    for node in witness.nodes:
        parts = untag(witness.labels[node])
        if isinstance(parts[0], list):
            continue
        u, i = parts
        if u in colour:
            raise ValueError(f"vertex {u!r} appears twice in the witness")
        colour[u] = i
    if set(colour) != set(G.vertices):
        raise ValueError("witness does not colour every vertex")
    if not is_proper(G, colour):
        raise ValueError("witness colouring is not proper")
    return {v: colour[v] for v in G.vertices}


def canonical_colored_graph(G: SimpleGraph, c: Mapping[str, int]) -> Graph:
    """The subdivided graph carrying colouring ``c``."""
    if not G.connected:
        raise ValueError("graph must be connected and non-empty")
    if not is_proper(G, c):
        raise ValueError("colouring is not proper")
    vnode = {u: tag("v", u) for u in G.vertices}
    enode = {e: tag("e", *e) for e in G.edges}
    labels = {vnode[u]: vertex_label(u, c[u]) for u in G.vertices}
    edges: dict[str, dict[str, str]] = {n: {} for n in [*vnode.values(), *enode.values()]}
    for (u, v), n in enode.items():
        labels[n] = edge_label(u, c[u], v, c[v])
        for x, y in ((u, v), (v, u)):
            edges[vnode[x]][link("+", x, c[x], y)] = n
            edges[n][link("-", x, c[x], y)] = vnode[x]
    nodes = [*vnode.values(), *enode.values()]
    return Graph(nodes, vnode[G.vertices[0]], labels, edges)


def brute_force_colourable(G: SimpleGraph) -> dict[str, int] | None:
    """First proper colouring in lexicographic order, by exhaustion."""
    for colours in itertools.product(COLOURS, repeat=len(G.vertices)):
        c = dict(zip(G.vertices, colours))
        if is_proper(G, c):
            return c
    return None
