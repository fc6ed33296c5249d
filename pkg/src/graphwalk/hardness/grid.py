"""Exponential grids checked by a graph-walking automaton.

The signature has three layers:

* a full binary tree of height ``2n`` (labels ``a0``, ``a1``/``b1``, ...),
  whose ``4^n`` leaves each hang one grid node off direction ``+d``;
* grid nodes labelled ``pos|symbol|head``.  ``pos`` (``LD`` ... ``RU``:
  horizontal L/C/R, vertical D/C/U) alone fixes which of the grid
  directions ``+1`` (right), ``-1``, ``+2`` (up), ``-2`` the node has;
* a chain of ``2n`` bit nodes (labels ``0_k`` / ``1_k``) below every grid
  node, spelling its row (first ``n`` bits) and column (last ``n``
  bits), most significant bit first.

The signature alone forces the tree and the chains.  The automaton built
by :func:`gen_grid_automaton` checks the rest and then that the rows,
bottom to top, spell an accepting computation of a Turing machine.

Automaton state names
---------------------
Names are ``|``-separated fields; the first field is the role:

``start zdown zgrid zchain zleave climb``
    walk the leftmost tree path and check that its grid node is (0, 0).
``down up fromL fromR``
    depth-first traversal of the tree; ``visit`` on arrival at a grid node.
``pos|P|s0|s1``
    compare the node's ``pos`` P with its chain (``s0``/``s1``: a 0 / 1
    bit has been seen in the current block).
``nb|0 rv gv gu ru bu nx``
    bit-by-bit comparison of the chain of a grid node with the chain of
    its neighbour in direction ``+1, -1, +2, -2`` (index field), at bit
    position ``p`` with comparator mode ``eq`` or ``flip``.
``cup|<state>``
    climb the chain back to its grid node, then continue as ``<state>``.
``to00 p2init init|j rew find rew2 wread wup wback``
    second phase: initial row, head search, row-to-row window check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..core import Graph, Signature, ValidationReport
from ..gwa import GraphWalkingAutomaton

POS = ("LU", "CU", "RU", "LC", "CC", "RC", "LD", "CD", "RD")
GRID_DIRS = ("+1", "-1", "+2", "-2")
NO_HEAD = "0"
_RESERVED = ("|", ":", ",")


@dataclass(frozen=True, eq=False)
class TuringMachine:
    """Nondeterministic one-tape machine, tape infinite to the right."""

    states: tuple[str, ...]
    input_alphabet: tuple[str, ...]
    work_alphabet: tuple[str, ...]
    blank: str
    delta: Mapping[tuple[str, str], tuple[tuple[str, str, str], ...]]
    initial: tuple[str, ...]
    accept: frozenset[tuple[str, str]]

    def __init__(self, states, input_alphabet, work_alphabet, blank, transitions,
                 initial, accept):
        delta: dict[tuple[str, str], list] = {}
        for (q, s), (p, t, mv) in transitions:
            opts = delta.setdefault((q, s), [])
            if (p, t, mv) not in opts:
                opts.append((p, t, mv))
        object.__setattr__(self, "states", tuple(states))
        object.__setattr__(self, "input_alphabet", tuple(input_alphabet))
        object.__setattr__(self, "work_alphabet", tuple(work_alphabet))
        object.__setattr__(self, "blank", blank)
        object.__setattr__(self, "delta", {k: tuple(v) for k, v in delta.items()})
        object.__setattr__(self, "initial", tuple(initial))
        object.__setattr__(self, "accept", frozenset(tuple(p) for p in accept))

    @property
    def transitions(self) -> list[tuple[tuple[str, str], tuple[str, str, str]]]:
        return [(k, t) for k, opts in self.delta.items() for t in opts]

    def moves(self, q: str, s: str) -> tuple[tuple[str, str, str], ...]:
        return self.delta.get((q, s), ())


class TMConfig(NamedTuple):
    state: str
    head: int
    tape: tuple[str, ...]


def validate_tm(M: TuringMachine) -> ValidationReport:
    out = []
    states = set(M.states)
    gamma = set(M.work_alphabet)
    for name in (*M.states, *M.work_alphabet):
        if any(c in name for c in _RESERVED) or not name:
            out.append(f"identifier {name!r} is empty or contains one of | : ,")
    if NO_HEAD in states:
        out.append(f"state name {NO_HEAD!r} is reserved for 'no head'")
    if M.blank not in gamma:
        out.append("blank is not in the work alphabet")
    if M.blank in M.input_alphabet:
        out.append("blank is an input symbol")
    for s in M.input_alphabet:
        if s not in gamma:
            out.append(f"input symbol {s!r} not in the work alphabet")
    for q in M.initial:
        if q not in states:
            out.append(f"initial state {q!r} is not a state")
    for q, s in M.accept:
        if q not in states or s not in gamma:
            out.append(f"accepting pair {(q, s)} is not over states x work alphabet")
    for (q, s), (p, t, mv) in M.transitions:
        if q not in states or p not in states or s not in gamma or t not in gamma:
            out.append(f"transition {(q, s)} -> {(p, t, mv)} uses unknown names")
        if mv not in ("L", "R"):
            out.append(f"transition {(q, s)} has move {mv!r}, expected L or R")
    return ValidationReport(tuple(out))


# --- signature ------------------------------------------------------------


def grid_label(pos: str, sym: str, head: str) -> str:
    return f"{pos}|{sym}|{head}"


def parse_grid_label(label: str) -> tuple[str, str, str]:
    pos, sym, head = label.split("|")
    return pos, sym, head


def pos_dirs(pos: str) -> list[str]:
    h, v = pos
    out = ["-d", "+d'"]
    if h != "R":
        out.append("+1")
    if h != "L":
        out.append("-1")
    if v != "U":
        out.append("+2")
    if v != "D":
        out.append("-2")
    return out


def chain_label(bit: int, k: int) -> str:
    return f"{bit}_{k}"


def gen_grid_signature(n: int, M: TuringMachine) -> Signature:
    if n < 1:
        raise ValueError("n must be at least 1")
    h = 2 * n
    directions: list[str] = []
    opposite: dict[str, str] = {}

    def pair(p, m):
        directions.extend([p, m])
        opposite[p], opposite[m] = m, p

    for i in range(1, h + 1):
        pair(f"+l{i}", f"-l{i}")
        pair(f"+r{i}", f"-r{i}")
    pair("+d", "-d")
    pair("+1", "-1")
    pair("+2", "-2")
    pair("+d'", "-d'")
    for i in range(1, h):
        pair(f"+c{i}", f"-c{i}")

    dol: dict[str, list[str]] = {"a0": ["+l1", "+r1"]}
    for i in range(1, h + 1):
        down = [f"+l{i + 1}", f"+r{i + 1}"] if i < h else ["+d"]
        dol[f"a{i}"] = [f"-l{i}", *down]
        dol[f"b{i}"] = [f"-r{i}", *down]
    for pos in POS:
        for sym in M.work_alphabet:
            for head in (*M.states, NO_HEAD):
                dol[grid_label(pos, sym, head)] = pos_dirs(pos)
    for k in range(1, h + 1):
        up = "-d'" if k == 1 else f"-c{k - 1}"
        ds = [up] + ([f"+c{k}"] if k < h else [])
        for bit in (0, 1):
            dol[chain_label(bit, k)] = ds
    return Signature(directions, opposite, list(dol), ["a0"], dol)


# --- automaton ------------------------------------------------------------


class _Builder:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.states: dict[str, None] = {}
        self.delta: dict[tuple[str, str], tuple[str, str]] = {}
        self.accept: set[tuple[str, str]] = set()

    def name(self, *parts) -> str:
        s = "|".join(str(p) for p in parts)
        self.states.setdefault(s, None)
        return s

    def on(self, state: str, label: str, action):
        """``action`` is ``(new_state, direction)``, ``"accept"`` or None
        (reject)."""
        if action is None:
            return
        if action != "accept" and action[1] not in self.sig.dirs(label):
            # unreachable on graphs over the signature; leave undefined
            return
        key = (state, label)
        assert key not in self.delta and key not in self.accept, key
        self.states.setdefault(state, None)
        if action == "accept":
            self.accept.add(key)
        else:
            self.states.setdefault(action[0], None)
            self.delta[key] = action

    def build(self, initial: str) -> GraphWalkingAutomaton:
        states = [initial] + [s for s in self.states if s != initial]
        return GraphWalkingAutomaton(states, initial, self.accept, self.delta)


def _block_ok(which: str, s0: bool, s1: bool) -> bool:
    # which: first letter (L/R/C for columns) or second (D/U/C for rows)
    if which in "LD":
        return not s1
    if which in "RU":
        return not s0
    return s0 and s1


def _compare(kk: int, p: int, n: int, mode: str, bv: int, bu: int) -> str | None:
    """One bit of the chain comparison between node v and neighbour u.

    kk indexes ``+1, -1, +2, -2``.  The row block changes along ``+-2``
    and the column block along ``+-1``; in a changing block the larger
    number must read ``x1 0..0`` where the smaller reads ``x0 1..1``.
    """
    changing = (p <= n) == (kk >= 2)
    if not changing:
        return mode if bu == bv else None
    lo, hi = (bv, bu) if kk in (0, 2) else (bu, bv)
    if mode == "eq":
        if lo == hi:
            return "eq"
        return "flip" if (lo, hi) == (0, 1) else None
    return "flip" if (lo, hi) == (1, 0) else None


def gen_grid_automaton(n: int, M: TuringMachine, w: Sequence[str],
                       f_bound_ok: bool) -> GraphWalkingAutomaton:
    """Automaton accepting the grid graphs that encode an accepting run
    of ``M`` on ``w``.

    ``f_bound_ok`` is the caller's promise that ``M`` halts on ``w``
    within ``2^n - 1`` steps; it cannot be checked here.
    """
    if not f_bound_ok:
        raise ValueError("caller must attest that M halts on w within 2^n - 1 steps")
    w = tuple(w)
    if len(w) > n:
        raise ValueError(f"input length {len(w)} exceeds n = {n}")
    if n < 1:
        raise ValueError("n must be at least 1")
    report = validate_tm(M)
    if not report.ok:
        raise ValueError("; ".join(report.violations))

    h = 2 * n
    b = _Builder(gen_grid_signature(n, M))
    A = [None] + [f"a{i}" for i in range(1, h + 1)]
    B = [None] + [f"b{i}" for i in range(1, h + 1)]
    grid = [
        (grid_label(pos, sym, head), pos, sym, head)
        for pos in POS
        for sym in M.work_alphabet
        for head in (*M.states, NO_HEAD)
    ]
    chains = [(chain_label(bit, k), bit, k) for k in range(1, h + 1) for bit in (0, 1)]
    climbing: set[str] = set()

    def climb_then(then: str, k: int):
        """From chain node k, head back to the grid node, arriving in ``then``."""
        if k == 1:
            return (then, "-d'")
        up = b.name("cup", then)
        if then not in climbing:
            climbing.add(then)
            for lab, _, kk in chains:
                if kk > 1:
                    b.on(up, lab, (up, f"-c{kk - 1}"))
                else:
                    b.on(up, lab, (then, "-d'"))
        return (up, f"-c{k - 1}")

    # phase 1, step 1: the leftmost path ends at a node with an all-zero chain
    start = b.name("start")
    zdown, zgrid, zchain, zleave, climb = (
        b.name(s) for s in ("zdown", "zgrid", "zchain", "zleave", "climb"))
    down, up, from_l, from_r, visit, to00 = (
        b.name(s) for s in ("down", "up", "fromL", "fromR", "visit", "to00"))
    b.on(start, "a0", (zdown, "+l1"))
    for i in range(1, h):
        b.on(zdown, A[i], (zdown, f"+l{i + 1}"))
    b.on(zdown, A[h], (zgrid, "+d"))
    for lab, *_ in grid:
        b.on(zgrid, lab, (zchain, "+d'"))
        b.on(zleave, lab, (climb, "-d"))
    for k in range(1, h + 1):
        b.on(zchain, chain_label(0, k),
             (zchain, f"+c{k}") if k < h else climb_then(zleave, k))
    for i in range(1, h + 1):
        b.on(climb, A[i], (climb, f"-l{i}"))
    b.on(climb, "a0", (down, "+l1"))

    # depth-first traversal of the tree, visiting every grid node
    for i in range(1, h + 1):
        for lab in (A[i], B[i]):
            b.on(down, lab, (down, f"+l{i + 1}") if i < h else (visit, "+d"))
            if i < h:
                b.on(from_l, lab, (down, f"+r{i + 1}"))
        b.on(up, A[i], (from_l, f"-l{i}"))
        b.on(up, B[i], (from_r, f"-r{i}"))
        if i < h:
            b.on(from_r, A[i], (from_l, f"-l{i}"))
            b.on(from_r, B[i], (from_r, f"-r{i}"))
    b.on(from_l, "a0", (down, "+r1"))
    b.on(from_r, "a0", (to00, "+l1"))

    # steps 2 and 3 at every grid node
    def nb_action(kk: int, pos: str):
        ds = pos_dirs(pos)
        for j in range(kk, 4):
            if GRID_DIRS[j] in ds:
                return (b.name("rv", j, 1, "eq"), "+d'")
        return (up, "-d")

    for lab, pos, _, _ in grid:
        b.on(visit, lab, (b.name("pos", pos, 0, 0), "+d'"))
        b.on(b.name("nb", 0), lab, nb_action(0, pos))

    for pos in POS:
        for s0 in (0, 1):
            for s1 in (0, 1):
                st = b.name("pos", pos, s0, s1)
                for lab, bit, k in chains:
                    t0, t1 = s0 or bit == 0, s1 or bit == 1
                    if k == n:
                        if not _block_ok(pos[1], t0, t1):
                            continue
                        t0 = t1 = False
                    if k == h:
                        if _block_ok(pos[0], t0, t1):
                            b.on(st, lab, climb_then(b.name("nb", 0), k))
                        continue
                    b.on(st, lab, (b.name("pos", pos, int(t0), int(t1)), f"+c{k}"))

    opposite_grid = {"+1": "-1", "-1": "+1", "+2": "-2", "-2": "+2"}
    for kk, gd in enumerate(GRID_DIRS):
        for p in range(1, h + 1):
            for mode in ("eq", "flip"):
                rv = b.name("rv", kk, p, mode)
                for lab, bit, k in chains:
                    if k < p:
                        b.on(rv, lab, (rv, f"+c{k}"))
                    elif k == p:
                        b.on(rv, lab, climb_then(b.name("gv", kk, p, mode, bit), k))
                for bv in (0, 1):
                    gv = b.name("gv", kk, p, mode, bv)
                    gu = b.name("gu", kk, p, mode, bv)
                    ru = b.name("ru", kk, p, mode, bv)
                    for lab, pos, _, _ in grid:
                        if gd in pos_dirs(pos):
                            b.on(gv, lab, (gu, gd))
                        b.on(gu, lab, (ru, "+d'"))
                    for lab, bit, k in chains:
                        if k < p:
                            b.on(ru, lab, (ru, f"+c{k}"))
                        elif k == p:
                            new = _compare(kk, p, n, mode, bv, bit)
                            if new is not None:
                                b.on(ru, lab, climb_then(b.name("bu", kk, p, new), k))
                bu = b.name("bu", kk, p, mode)
                nx = b.name("nx", kk, p, mode)
                changing_here = (p <= n) == (kk >= 2)
                for lab, pos, _, _ in grid:
                    if opposite_grid[gd] in pos_dirs(pos):
                        b.on(bu, lab, (nx, opposite_grid[gd]))
                    if p in (n, h) and changing_here and mode != "flip":
                        continue
                    nxt_mode = "eq" if p in (n, h) else mode
                    if p == h:
                        b.on(nx, lab, nb_action(kk + 1, pos))
                    else:
                        b.on(nx, lab, (b.name("rv", kk, p + 1, nxt_mode), "+d'"))

    # step 4: back to (0, 0) along the leftmost path
    p2init = b.name("p2init")
    for i in range(1, h):
        b.on(to00, A[i], (to00, f"+l{i + 1}"))
    b.on(to00, A[h], (p2init, "+d"))

    # phase 2
    expected = lambda j: w[j] if j < len(w) else M.blank  # noqa: E731
    cap = len(w)
    rew, find, rew2 = b.name("rew"), b.name("find"), b.name("rew2")

    def wread_action(mode: str, sym: str, head: str):
        return (b.name("wup", mode, sym, head), "+2")

    def find_action(pos, sym, head):
        if head != NO_HEAD:
            if (head, sym) in M.accept:
                return "accept"
            if pos[1] == "U":
                return None
            if pos[0] == "L":
                return wread_action("pre", sym, head)
            return (rew2, "-1")
        if pos[0] == "R":
            return None
        return (find, "+1")

    for lab, pos, sym, head in grid:
        if head in M.initial and sym == expected(0) and pos[0] != "R":
            b.on(p2init, lab, (b.name("init", min(1, cap)), "+1"))
        b.on(find, lab, find_action(pos, sym, head))
        b.on(rew, lab, find_action(pos, sym, head) if pos[0] == "L" else (rew, "-1"))
        b.on(rew2, lab,
             wread_action("pre", sym, head) if pos[0] == "L" else (rew2, "-1"))
    for j in range(cap + 1):
        st = b.name("init", j)
        for lab, pos, sym, head in grid:
            if head != NO_HEAD or sym != expected(j):
                continue
            b.on(st, lab, (rew, "-1") if pos[0] == "R"
                 else (b.name("init", min(j + 1, cap)), "+1"))

    # row-to-row window check; modes: pre, post, L:q' (head arrived from
    # the right), R:q:s:t (head at q reading s wrote t and must move right)
    modes = ["pre", "post"]
    for (q, s), (p, t, mv) in M.transitions:
        m = f"L:{p}" if mv == "L" else f"R:{q}:{s}:{t}"
        if m not in modes:
            modes.append(m)

    def window(mode, sa, ha, sb, hb):
        if mode == "pre":
            if ha == NO_HEAD:
                if sb != sa:
                    return None
                return "pre" if hb == NO_HEAD else (f"L:{hb}" if f"L:{hb}" in modes else None)
            if hb != NO_HEAD:
                return None
            m = f"R:{ha}:{sa}:{sb}"
            return m if m in modes else None
        if mode == "post":
            return "post" if (ha == NO_HEAD and hb == NO_HEAD and sb == sa) else None
        kind, *rest = mode.split(":")
        if kind == "L":
            (q2,) = rest
            if ha == NO_HEAD or hb != NO_HEAD:
                return None
            return "post" if (q2, sb, "L") in M.moves(ha, sa) else None
        q, s, t = rest
        if ha != NO_HEAD or hb == NO_HEAD or sb != sa:
            return None
        return "post" if (hb, t, "R") in M.moves(q, s) else None

    for mode in modes:
        wread = b.name("wread", mode)
        wback = b.name("wback", mode)
        for lab, pos, sym, head in grid:
            b.on(wread, lab, wread_action(mode, sym, head))
            if pos[0] == "R":
                b.on(wback, lab, (rew, "+2") if mode == "post" else None)
            else:
                b.on(wback, lab, (b.name("wread", mode), "+1"))
        for sa in M.work_alphabet:
            for ha in (*M.states, NO_HEAD):
                wup = b.name("wup", mode, sa, ha)
                for lab, pos, sb, hb in grid:
                    new = window(mode, sa, ha, sb, hb)
                    if new is not None:
                        b.on(wup, lab, (b.name("wback", new), "-2"))

    return b.build(start)


# --- canonical graph ------------------------------------------------------


def _bits(x: int, n: int) -> list[int]:
    return [(x >> (n - 1 - i)) & 1 for i in range(n)]


def check_computation(n: int, M: TuringMachine, w: Sequence[str],
                      computation: Sequence[TMConfig]) -> list[TMConfig]:
    """Validate an accepting run and pad every tape to width ``2^n``."""
    size = 2**n
    if not computation:
        raise ValueError("empty computation")
    if len(computation) > size:
        raise ValueError(f"computation has more than {size} configurations")
    if len(w) > size:
        raise ValueError("input does not fit on a row")
    out = []
    for c in computation:
        c = TMConfig(*c)
        tape = tuple(c.tape)
        if len(tape) > size:
            raise ValueError("tape longer than a grid row")
        if not 0 <= c.head < size:
            raise ValueError(f"head position {c.head} outside the grid")
        out.append(TMConfig(c.state, c.head, tape + (M.blank,) * (size - len(tape))))
    first = out[0]
    if first.state not in M.initial or first.head != 0:
        raise ValueError("computation does not start in an initial configuration")
    if first.tape != tuple(w) + (M.blank,) * (size - len(w)):
        raise ValueError("initial tape does not hold the input")
    for c, nxt in zip(out, out[1:]):
        ok = False
        for p, t, mv in M.moves(c.state, c.tape[c.head]):
            h = c.head + (1 if mv == "R" else -1)
            tape = c.tape[: c.head] + (t,) + c.tape[c.head + 1:]
            if nxt == TMConfig(p, h, tape):
                ok = True
                break
        if not ok:
            raise ValueError(f"no transition leads from {c} to {nxt}")
    last = out[-1]
    if (last.state, last.tape[last.head]) not in M.accept:
        raise ValueError("computation does not end in an accepting configuration")
    return out


def grid_node(i: int, j: int) -> str:
    return f"g{i},{j}"


def chain_node(i: int, j: int, k: int) -> str:
    return f"c{i},{j},{k}"


def canonical_grid_graph(n: int, M: TuringMachine, w: Sequence[str],
                         computation: Sequence[TMConfig]) -> Graph:
    """The tree + grid + chains graph whose rows spell ``computation``.

    Rows after the last configuration repeat it.
    """
    rows = check_computation(n, M, w, computation)
    size = 2**n
    h = 2 * n
    rows = rows + [rows[-1]] * (size - len(rows))
    nodes: list[str] = []
    labels: dict[str, str] = {}
    edges: dict[str, dict[str, str]] = {}

    def add(v, lab):
        nodes.append(v)
        labels[v] = lab
        edges[v] = {}

    def link(v, d, u, e):
        edges[v][d] = u
        edges[u][e] = v

    add("t", "a0")
    level = ["t"]
    for i in range(1, h + 1):
        nxt = []
        for v in level:
            for bit, name, sign in ((0, "a", "l"), (1, "b", "r")):
                u = v + str(bit)
                add(u, f"{name}{i}")
                link(v, f"+{sign}{i}", u, f"-{sign}{i}")
                nxt.append(u)
        level = nxt
    for i in range(size):
        for j in range(size):
            c = rows[i]
            head = c.state if c.head == j else NO_HEAD
            pos = ("L" if j == 0 else "R" if j == size - 1 else "C") + (
                "D" if i == 0 else "U" if i == size - 1 else "C")
            add(grid_node(i, j), grid_label(pos, c.tape[j], head))
    for i in range(size):
        for j in range(size):
            g = grid_node(i, j)
            leaf = "t" + "".join(map(str, _bits(i, n) + _bits(j, n)))
            link(leaf, "+d", g, "-d")
            if j + 1 < size:
                link(g, "+1", grid_node(i, j + 1), "-1")
            if i + 1 < size:
                link(g, "+2", grid_node(i + 1, j), "-2")
    for i in range(size):
        for j in range(size):
            bits = _bits(i, n) + _bits(j, n)
            prev, d, e = grid_node(i, j), "+d'", "-d'"
            for k in range(1, h + 1):
                v = chain_node(i, j, k)
                add(v, chain_label(bits[k - 1], k))
                link(prev, d, v, e)
                prev, d, e = v, f"+c{k}", f"-c{k}"
    return Graph(nodes, "t", labels, edges)
