"""Emptiness of signatures via balanced vectors.

A graph over a signature exists with ``x_a`` nodes of each label ``a`` iff
the count vector is *balanced*: exactly one initial-label node, and for
every pair of opposite directions ``d != -d`` as many ``d`` end-points as
``-d`` end-points.  Deciding emptiness therefore reduces to finding a
non-negative integer solution of a small linear system; the graph itself
is wired afterwards by :func:`build_graph`.

Two exact routes find the canonical vector (minimum number of nodes,
ties broken towards the lexicographically smallest count vector in
signature label order):

``"search"``
    breadth-first search over imbalance vectors.  Every zero-sum sequence
    of vectors with entries in {-1, 0, 1} can be reordered so that all
    partial sums stay within distance ``n`` (the number of direction
    pairs) of the origin in the max-norm (Steinitz / Grinberg-Sevastyanov),
    so the search box is finite and the search proves emptiness too.
``"milp"``
    a mixed-integer program solved by HiGHS (``scipy.optimize.milp``),
    used when the search box is too large to explore.

``"auto"`` picks the search for small signatures and the MILP otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .core import Graph, ResourceLimitError, Signature

DEFAULT_MAX_STATES = 200_000
# above this many direction pairs "auto" goes straight to the MILP
AUTO_SEARCH_MAX_PAIRS = 6


@dataclass(frozen=True)
class DirectionPairing:
    pairs: tuple[tuple[str, str], ...]
    self_opposite: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class BalancedVector:
    counts: Mapping[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, label: str) -> int:
        return self.counts.get(label, 0)


@dataclass
class Verdict:
    """Outcome of an emptiness check.

    ``witness`` is a smallest graph in the language when ``nonempty``;
    ``run`` and ``tiling`` are filled in by the automaton pipelines.
    """

    nonempty: bool
    witness: Graph | None = None
    vector: BalancedVector | None = None
    run: object | None = None
    tiling: object | None = None
    annotated: Graph | None = None

    def __bool__(self) -> bool:
        return self.nonempty


def direction_pairing(sig: Signature) -> DirectionPairing:
    pairs = []
    selfs = []
    seen: set[str] = set()
    for d in sig.directions:
        if d in seen:
            continue
        e = sig.opposite[d]
        seen.add(d)
        if e == d:
            selfs.append(d)
        else:
            seen.add(e)
            pairs.append((d, e))
    return DirectionPairing(tuple(pairs), tuple(selfs))


def contribution_vector(sig: Signature, a: str, pairing: DirectionPairing) -> tuple[int, ...]:
    ds = set(sig.dirs(a))
    return tuple((d in ds) - (e in ds) for d, e in pairing.pairs)


def is_balanced(sig: Signature, x: Mapping[str, int] | BalancedVector) -> bool:
    if isinstance(x, BalancedVector):
        x = x.counts
    if any(c < 0 for c in x.values()):
        return False
    if sum(x.get(a, 0) for a in sig.initial_labels) != 1:
        return False
    for d, e in direction_pairing(sig).pairs:
        need_d = sum(c for a, c in x.items() if d in sig.dirs(a))
        need_e = sum(c for a, c in x.items() if e in sig.dirs(a))
        if need_d != need_e:
            return False
    return True


def node_count_bound(sig: Signature) -> int:
    """Upper bound ``2mr * min(r^r, k^(2r-2))`` on the smallest graph.

    Degenerate signatures (fewer than two directions, or an initial label
    with no directions) have a one-node graph whenever they are non-empty.
    Non-initial labels with no directions never help and are not counted.
    """
    if len(sig.directions) < 2:
        return 1
    if any(not sig.dirs(a) for a in sig.initial_labels):
        return 1
    kept = [a for a in sig.labels if sig.dirs(a)]
    if not kept:
        return 1
    m = len(kept)
    k = max(len(sig.dirs(a)) for a in kept)
    r = len(sig.directions) // 2
    return 2 * m * r * min(r**r, k ** (2 * r - 2))


def _add(u: tuple[int, ...], v: tuple[int, ...], times: int = 1) -> tuple[int, ...]:
    return tuple(a + times * b for a, b in zip(u, v))


class _System:
    """Contribution vectors of one signature, in label order."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self.pairing = direction_pairing(sig)
        self.n = self.pairing.n
        self.labels = sig.labels
        self.vec = [contribution_vector(sig, a, self.pairing) for a in sig.labels]
        self.init = [int(sig.is_initial(a)) for a in sig.labels]
        self.zero = (0,) * self.n

    def moves(self, start: int = 0) -> list[tuple[int, tuple[int, ...]]]:
        out = []
        seen = set()
        for j in range(start, len(self.labels)):
            key = (self.init[j], self.vec[j])
            if key in seen or (not key[0] and not any(key[1])):
                continue
            seen.add(key)
            out.append(key)
        return out


def _min_total_search(system: _System, cap: int, max_states: int) -> int | None:
    """Smallest number of nodes of a balanced vector, or None if there is none."""
    moves = system.moves()
    radius = max(system.n, 1)
    start = (0, system.zero)
    goal = (1, system.zero)
    visited = {start}
    layer = [start]
    depth = 0
    while layer and depth < cap:
        depth += 1
        nxt = []
        for f, imb in layer:
            for fi, vec in moves:
                if f and fi:
                    continue
                s = (f | fi, _add(imb, vec))
                if s == goal:
                    return depth
                if s in visited or any(abs(c) > radius for c in s[1]):
                    continue
                visited.add(s)
                nxt.append(s)
        if len(visited) > max_states:
            raise ResourceLimitError(
                f"balanced-vector search visited more than {max_states} states"
            )
        layer = nxt
    return None


def _exactly_reachable(moves, target, total, need_init, max_states) -> bool:
    """Can exactly ``total`` vectors from ``moves`` sum to ``target``
    using exactly ``need_init`` initial ones?"""
    if need_init < 0 or need_init > total:
        return False
    zero = (0,) * len(target)
    layer = {(0, zero)}
    for t in range(total):
        left = total - t - 1
        nxt = set()
        for f, imb in layer:
            for fi, vec in moves:
                nf = f + fi
                if nf > need_init or need_init - nf > left:
                    continue
                s = _add(imb, vec)
                if any(abs(g - c) > left for g, c in zip(target, s)):
                    continue
                nxt.add((nf, s))
        if len(nxt) > max_states:
            raise ResourceLimitError(
                f"balanced-vector reconstruction exceeded {max_states} states"
            )
        layer = nxt
        if not layer:
            return False
    return (need_init, tuple(target)) in layer


def _lex_smallest_search(system: _System, total: int, max_states: int) -> list[int]:
    m = len(system.labels)
    x = [0] * m
    acc = system.zero
    used = 0
    init_used = 0
    for j in range(m):
        suffix = system.moves(j + 1)
        for c in range(total - used + 1):
            if system.init[j] and init_used + c > 1:
                raise AssertionError("no completion found")  # pragma: no cover
            p = _add(acc, system.vec[j], c)
            target = tuple(-v for v in p)
            left = total - used - c
            need = 1 - init_used - c * system.init[j]
            if _exactly_reachable(suffix, target, left, need, max_states):
                x[j] = c
                acc = p
                used += c
                init_used += c * system.init[j]
                break
        else:  # pragma: no cover
            raise AssertionError("no completion found")
    return x


def _milp_solve(system: _System, fixed: dict[int, int], objective, total=None,
                time_limit: float = 60.0):
    from scipy.optimize import Bounds, LinearConstraint, milp

    m = len(system.labels)
    rows = []
    rhs = []
    for i in range(system.n):
        rows.append([system.vec[j][i] for j in range(m)])
        rhs.append(0)
    rows.append(system.init)
    rhs.append(1)
    if total is not None:
        rows.append([1] * m)
        rhs.append(total)
    lb = np.zeros(m)
    ub = np.array([1.0 if system.init[j] else np.inf for j in range(m)])
    for j, c in fixed.items():
        lb[j] = ub[j] = c
    res = milp(
        c=np.asarray(objective, dtype=float),
        constraints=LinearConstraint(np.array(rows, dtype=float), rhs, rhs),
        integrality=np.ones(m),
        bounds=Bounds(lb, ub),
        options={"time_limit": time_limit, "mip_rel_gap": 0.0},
    )
    if res.status == 2:
        return None
    if res.status != 0:
        raise ResourceLimitError(f"MILP solver stopped: {res.message}")
    x = [int(round(v)) for v in res.x]
    if any(abs(v - r) > 1e-6 for v, r in zip(res.x, x)):  # pragma: no cover
        raise ResourceLimitError("MILP solver returned a fractional point")
    return x


def _canonical_milp(system: _System) -> list[int] | None:
    m = len(system.labels)
    x = _milp_solve(system, {}, [1] * m)
    if x is None:
        return None
    total = sum(x)
    fixed: dict[int, int] = {}
    for j in range(m):
        if x[j] == 0:
            fixed[j] = 0
            continue
        obj = [0] * m
        obj[j] = 1
        y = _milp_solve(system, fixed, obj, total=total)
        assert y is not None
        fixed[j] = y[j]
        x = y
    return [fixed[j] for j in range(m)]


def find_balanced_vector(
    sig: Signature,
    method: str = "auto",
    max_states: int = DEFAULT_MAX_STATES,
) -> BalancedVector | None:
    """Canonical minimal balanced vector, or None if the signature is empty.

    Raises :class:`ResourceLimitError` when the chosen route runs out of
    budget; a wrong verdict is never returned.
    """
    if method not in ("auto", "search", "milp"):
        raise ValueError(f"unknown method {method!r}")
    system = _System(sig)
    if not any(system.init):
        return None
    if method == "auto":
        method = "search" if system.n <= AUTO_SEARCH_MAX_PAIRS else "milp"
    if method == "search":
        total = _min_total_search(system, node_count_bound(sig), max_states)
        if total is None:
            return None
        x = _lex_smallest_search(system, total, max_states)
    else:
        x = _canonical_milp(system)
        if x is None:
            return None
    vec = BalancedVector(dict(zip(sig.labels, x)))
    if not is_balanced(sig, vec):  # pragma: no cover
        raise AssertionError("solver produced an unbalanced vector")
    return vec


def build_graph(sig: Signature, x: Mapping[str, int] | BalancedVector) -> Graph:
    """Wire up a graph with exactly ``x[a]`` nodes of each label ``a``.

    Nodes are numbered ``"1"``, ``"2"``, ... label by label in signature
    order.  Self-opposite directions become loops; for every other pair
    the nodes needing ``d`` are matched with the nodes needing ``-d`` in
    numbering order.
    """
    if isinstance(x, BalancedVector):
        x = x.counts
    if not is_balanced(sig, x):
        raise ValueError("vector is not balanced")
    nodes: list[str] = []
    labels: dict[str, str] = {}
    for a in sig.labels:
        for _ in range(x.get(a, 0)):
            v = str(len(nodes) + 1)
            nodes.append(v)
            labels[v] = a
    initial = next(v for v in nodes if sig.is_initial(labels[v]))
    edges: dict[str, dict[str, str]] = {v: {} for v in nodes}
    users: dict[str, list[str]] = {d: [] for d in sig.directions}
    for v in nodes:
        for d in sig.dirs(labels[v]):
            users[d].append(v)
    pairing = direction_pairing(sig)
    for d in pairing.self_opposite:
        for v in users[d]:
            edges[v][d] = v
    for d, e in pairing.pairs:
        for v, u in zip(users[d], users[e]):
            edges[v][d] = u
            edges[u][e] = v
    return Graph(nodes, initial, labels, edges)


def signature_nonempty(sig: Signature, method: str = "auto",
                       max_states: int = DEFAULT_MAX_STATES) -> Verdict:
    vec = find_balanced_vector(sig, method=method, max_states=max_states)
    if vec is None:
        return Verdict(False)
    return Verdict(True, witness=build_graph(sig, vec), vector=vec)


# --- brute-force oracle -------------------------------------------------


def _involutions(items: list[str]) -> Iterator[list[tuple[str, str]]]:
    """All ways to pair up ``items``; unpaired items pair with themselves."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for tail in _involutions(rest):
        yield [(first, first)] + tail
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _involutions(remaining):
            yield [(first, other)] + tail


def _involution_count(k: int) -> int:
    a, b = 1, 1
    for i in range(1, k):
        a, b = b, b + i * a
    return b if k else 1


class _EndpointCounter:
    """Per-direction end-point bookkeeping for the oracle's vector search."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self.pairs = direction_pairing(sig).pairs
        m = len(sig.labels)
        self.delta = [
            [
                (d in sig.dirs(a)) - (e in sig.dirs(a))
                for d, e in self.pairs
            ]
            for a in sig.labels
        ]
        self.init = [sig.is_initial(a) for a in sig.labels]
        # can some label at index >= j raise / lower pair i?
        self.can_up = [[False] * len(self.pairs) for _ in range(m + 1)]
        self.can_down = [[False] * len(self.pairs) for _ in range(m + 1)]
        self.init_later = [False] * (m + 1)
        for j in range(m - 1, -1, -1):
            for i in range(len(self.pairs)):
                self.can_up[j][i] = self.can_up[j + 1][i] or self.delta[j][i] > 0
                self.can_down[j][i] = self.can_down[j + 1][i] or self.delta[j][i] < 0
            self.init_later[j] = self.init_later[j + 1] or self.init[j]

    def vectors(self, total: int) -> Iterator[list[int]]:
        """Count vectors with ``total`` nodes that can carry a graph."""
        m = len(self.sig.labels)
        x = [0] * m
        diff = [0] * len(self.pairs)

        def viable(j, left, inits):
            if inits > 1:
                return False
            if inits == 0 and not (left and self.init_later[j]):
                return False
            for i, dv in enumerate(diff):
                if abs(dv) > left:
                    return False
                if dv > 0 and not self.can_down[j][i]:
                    return False
                if dv < 0 and not self.can_up[j][i]:
                    return False
            return True

        def rec(j, left, inits):
            if j == m:
                if left == 0 and inits == 1 and not any(diff):
                    yield list(x)
                return
            if not viable(j, left, inits):
                return
            top = 1 if self.init[j] else left
            for c in range(min(top, left) + 1):
                x[j] = c
                for i, dv in enumerate(self.delta[j]):
                    diff[i] += c * dv
                yield from rec(j + 1, left - c, inits + c * self.init[j])
                for i, dv in enumerate(self.delta[j]):
                    diff[i] -= c * dv
            x[j] = 0

        yield from rec(0, total, 0)


def _graphs_for_vector(sig: Signature, x: list[int]) -> Iterator[Graph]:
    nodes: list[str] = []
    labels: dict[str, str] = {}
    for a, c in zip(sig.labels, x):
        for _ in range(c):
            v = str(len(nodes) + 1)
            nodes.append(v)
            labels[v] = a
    users: dict[str, list[str]] = {d: [] for d in sig.directions}
    for v in nodes:
        for d in sig.dirs(labels[v]):
            users[d].append(v)
    pairing = direction_pairing(sig)
    choices = []
    for d, e in pairing.pairs:
        if len(users[d]) != len(users[e]):
            return
        choices.append(
            [
                [(d, e, v, u) for v, u in zip(users[d], perm)]
                for perm in itertools.permutations(users[e])
            ]
        )
    for d in pairing.self_opposite:
        choices.append(
            [[(d, d, v, u) for v, u in inv] for inv in _involutions(users[d])]
        )
    initials = [v for v in nodes if sig.is_initial(labels[v])]
    if len(initials) != 1:
        return
    for combo in itertools.product(*choices):
        edges: dict[str, dict[str, str]] = {v: {} for v in nodes}
        for block in combo:
            for d, e, v, u in block:
                edges[v][d] = u
                edges[u][e] = v
        yield Graph(nodes, initials[0], labels, edges)


def enumerate_graphs(sig: Signature, max_nodes: int) -> Iterator[Graph]:
    """Every graph over ``sig`` with at most ``max_nodes`` nodes.

    Graphs come in order of node count; nodes are numbered ``"1".."N"``
    label by label, so each graph appears exactly once under this naming.
    Every matching of ``d`` end-points with ``-d`` end-points is produced,
    and every pairing (loops included) of self-opposite end-points.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    counter = _EndpointCounter(sig)
    for total in range(1, max_nodes + 1):
        for x in counter.vectors(total):
            yield from _graphs_for_vector(sig, x)


def count_graphs(sig: Signature, max_nodes: int) -> int:
    """How many graphs :func:`enumerate_graphs` would produce."""
    counter = _EndpointCounter(sig)
    pairing = direction_pairing(sig)
    out = 0
    for total in range(1, max_nodes + 1):
        for x in counter.vectors(total):
            size = dict.fromkeys(sig.directions, 0)
            for a, c in zip(sig.labels, x):
                for d in sig.dirs(a):
                    size[d] += c
            ways = 1
            for d, _ in pairing.pairs:
                ways *= math.factorial(size[d])
            for d in pairing.self_opposite:
                ways *= _involution_count(size[d])
            out += ways
    return out


def oracle_min_nodes(sig: Signature, max_nodes: int) -> int | None:
    """Node count of the smallest graph found by brute force, if any."""
    for g in enumerate_graphs(sig, max_nodes):
        return len(g.nodes)
    return None
