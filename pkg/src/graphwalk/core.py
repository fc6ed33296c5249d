"""Signatures and graphs over them.

A signature fixes the directions (edge end-point labels) with their
opposites, the node labels, which of them may mark the initial node, and
the set of directions every label must use.  A graph assigns a label to
each node and an edge to every direction its label requires; edges are
stored as a per-node map ``direction -> neighbour``, so a loop or a
multi-edge is simply several entries pointing at the same node.

Identifiers (directions, labels, nodes) are plain strings.  Everything
that depends on an order (star rays, matching order, tie-breaking) uses
the order in which the signature lists its directions and labels.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class ResourceLimitError(RuntimeError):
    """A search exceeded its configured budget; no verdict was produced."""


def tag(*parts) -> str:
    """Compact, parseable identifier built from structured parts."""
    return json.dumps(list(parts), separators=(",", ":"))


def untag(ident: str) -> list:
    return json.loads(ident)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class Signature:
    directions: tuple[str, ...]
    opposite: Mapping[str, str]
    labels: tuple[str, ...]
    initial_labels: frozenset[str]
    dirs_of_label: Mapping[str, tuple[str, ...]]

    def __init__(
        self,
        directions: Iterable[str],
        opposite: Mapping[str, str],
        labels: Iterable[str],
        initial_labels: Iterable[str],
        dirs_of_label: Mapping[str, Iterable[str]],
    ):
        directions = tuple(directions)
        order = {d: i for i, d in enumerate(directions)}
        # keep every D_a in global direction order; unknown directions sort
        # last so that validate_signature can still report them
        dol = {
            a: tuple(sorted(ds, key=lambda d: order.get(d, len(order))))
            for a, ds in dirs_of_label.items()
        }
        object.__setattr__(self, "directions", directions)
        object.__setattr__(self, "opposite", dict(opposite))
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "initial_labels", frozenset(initial_labels))
        object.__setattr__(self, "dirs_of_label", dol)

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return (
            self.directions == other.directions
            and self.opposite == other.opposite
            and self.labels == other.labels
            and self.initial_labels == other.initial_labels
            and self.dirs_of_label == other.dirs_of_label
        )

    def __hash__(self):
        return hash((self.directions, self.labels))

    def __repr__(self):
        return (
            f"Signature(|D|={len(self.directions)}, |Sigma|={len(self.labels)}, "
            f"|Sigma0|={len(self.initial_labels)})"
        )

    @cached_property
    def direction_index(self) -> dict[str, int]:
        return {d: i for i, d in enumerate(self.directions)}

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.labels)}

    def dirs(self, label: str) -> tuple[str, ...]:
        return self.dirs_of_label.get(label, ())

    def is_initial(self, label: str) -> bool:
        return label in self.initial_labels

    @property
    def max_degree(self) -> int:
        return max((len(self.dirs(a)) for a in self.labels), default=0)


@dataclass(frozen=True, eq=False)
class Graph:
    nodes: tuple[str, ...]
    initial: str
    labels: Mapping[str, str]
    edges: Mapping[str, Mapping[str, str]]

    def __init__(
        self,
        nodes: Iterable[str],
        initial: str,
        labels: Mapping[str, str],
        edges: Mapping[str, Mapping[str, str]],
    ):
        nodes = tuple(nodes)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "labels", dict(labels))
        object.__setattr__(
            self, "edges", {v: dict(edges.get(v, {})) for v in nodes}
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return graphs_identical(self, other)

    def __hash__(self):
        return hash((self.nodes, self.initial))

    def __repr__(self):
        return f"Graph(|V|={len(self.nodes)}, initial={self.initial!r})"

    def __len__(self):
        return len(self.nodes)

    def step(self, v: str, d: str) -> str | None:
        """The neighbour ``v + d``, or None when the edge is absent."""
        return self.edges[v].get(d)


def validate_signature(sig: Signature) -> ValidationReport:
    out: list[str] = []
    seen: set[str] = set()
    for d in sig.directions:
        if d in seen:
            out.append(f"duplicate direction {d!r}")
        seen.add(d)
    for d in sig.directions:
        if d not in sig.opposite:
            out.append(f"opposite undefined on {d!r}")
            continue
        e = sig.opposite[d]
        if e not in seen:
            out.append(f"opposite of {d!r} is unknown direction {e!r}")
        elif sig.opposite.get(e) != d:
            out.append(f"opposite not involution on {d!r}")
    for d in sig.opposite:
        if d not in seen:
            out.append(f"opposite given for unknown direction {d!r}")

    labels: set[str] = set()
    for a in sig.labels:
        if a in labels:
            out.append(f"duplicate label {a!r}")
        labels.add(a)
    for a in sorted(sig.initial_labels - labels):
        out.append(f"initial label {a!r} is not a label")
    for a in sig.labels:
        if a not in sig.dirs_of_label:
            out.append(f"no direction set for label {a!r}")
    for a, ds in sig.dirs_of_label.items():
        if a not in labels:
            out.append(f"direction set given for unknown label {a!r}")
        counts = Counter(ds)
        for d, c in counts.items():
            if d not in seen:
                out.append(f"label {a!r} uses unknown direction {d!r}")
            if c > 1:
                out.append(f"label {a!r} lists direction {d!r} twice")
    return ValidationReport(tuple(out))


def validate_graph(sig: Signature, g: Graph) -> ValidationReport:
    out: list[str] = []
    nodes = set(g.nodes)
    if len(nodes) != len(g.nodes):
        out.append("duplicate node identifiers")
    if not g.nodes:
        out.append("graph has no nodes")
    if g.initial not in nodes:
        out.append(f"initial node {g.initial!r} is not a node")
    for v in g.nodes:
        a = g.labels.get(v)
        if a is None:
            out.append(f"node {v!r} has no label")
            continue
        if a not in sig.label_index:
            out.append(f"node {v!r} has unknown label {a!r}")
            continue
        if sig.is_initial(a) and v != g.initial:
            out.append(f"non-initial node {v!r} carries initial label {a!r}")
        if v == g.initial and not sig.is_initial(a):
            out.append(f"initial node {v!r} has non-initial label {a!r}")
        need = set(sig.dirs(a))
        have = g.edges.get(v, {})
        for d in sig.dirs(a):
            if d not in have:
                out.append(f"node {v!r} misses direction {d!r}")
        for d, u in have.items():
            if d not in need:
                out.append(f"node {v!r} has edge in direction {d!r} not used by {a!r}")
                continue
            if u not in nodes:
                out.append(f"edge {v!r}+{d!r} leads to unknown node {u!r}")
                continue
            back = g.edges.get(u, {}).get(sig.opposite.get(d))
            if back != v:
                out.append(f"edge {v!r}+{d!r}={u!r} has no matching opposite end")
    for v in g.labels:
        if v not in nodes:
            out.append(f"label given for unknown node {v!r}")
    return ValidationReport(tuple(out))


def label_counts(g: Graph, sig: Signature | None = None) -> dict[str, int]:
    """Number of nodes carrying each label.

    With a signature, every label of it appears in the result (zeros
    included) in signature order.
    """
    counts = Counter(g.labels[v] for v in g.nodes)
    if sig is None:
        return dict(counts)
    return {a: counts.get(a, 0) for a in sig.labels}


def graphs_identical(g1: Graph, g2: Graph) -> bool:
    return (
        set(g1.nodes) == set(g2.nodes)
        and len(g1.nodes) == len(g2.nodes)
        and g1.initial == g2.initial
        and all(g1.labels.get(v) == g2.labels.get(v) for v in g1.nodes)
        and all(g1.edges.get(v, {}) == g2.edges.get(v, {}) for v in g1.nodes)
    )


def make_signature(
    directions: Sequence[str],
    opposite: Mapping[str, str],
    dirs_of_label: Mapping[str, Sequence[str]],
    initial: Iterable[str],
) -> Signature:
    """Shorthand: labels are taken in the order of ``dirs_of_label``."""
    return Signature(directions, opposite, list(dirs_of_label), initial, dirs_of_label)


def relabel(g: Graph, label_map, dir_map) -> Graph:
    """Same nodes and edge structure with labels/directions rewritten."""
    labels = {v: label_map(v, g.labels[v]) for v in g.nodes}
    edges = {
        v: {dir_map(v, d, u): u for d, u in g.edges[v].items()} for v in g.nodes
    }
    return Graph(g.nodes, g.initial, labels, edges)
