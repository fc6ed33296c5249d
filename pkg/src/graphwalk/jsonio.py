"""JSON interchange for every public data type.

Each ``*_to_json`` returns plain dicts/lists with fields in a fixed order;
each ``*_from_json`` checks the field set (unknown fields are an error)
and the basic shapes, then builds the object.  Semantic checks are left to
the ``validate_*`` functions.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .core import Graph, Signature
from .gwa import Configuration, GraphWalkingAutomaton, RunResult
from .hardness.coloring import SimpleGraph
from .hardness.grid import TMConfig, TuringMachine
from .solver import BalancedVector, Verdict
from .star import Star, StarAutomaton


class SchemaError(ValueError):
    """Input JSON does not match the expected schema."""


def _fields(obj: Any, what: str, required: tuple[str, ...], optional: tuple[str, ...] = ()):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what}: expected an object, got {type(obj).__name__}")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise SchemaError(f"{what}: unknown fields {sorted(unknown)}")
    missing = [f for f in required if f not in obj]
    if missing:
        raise SchemaError(f"{what}: missing fields {missing}")


def _strs(xs: Any, what: str) -> list[str]:
    if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
        raise SchemaError(f"{what}: expected a list of strings")
    return xs


def _str_map(m: Any, what: str) -> dict[str, str]:
    if not isinstance(m, dict) or not all(isinstance(v, str) for v in m.values()):
        raise SchemaError(f"{what}: expected an object of strings")
    return m


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from None


# --- signatures and graphs -------------------------------------------------


def signature_to_json(sig: Signature) -> dict:
    return {
        "directions": list(sig.directions),
        "opposite": dict(sig.opposite),
        "labels": list(sig.labels),
        "initial_labels": [a for a in sig.labels if sig.is_initial(a)]
        + sorted(a for a in sig.initial_labels if a not in sig.label_index),
        "dirs_of_label": {a: list(ds) for a, ds in sig.dirs_of_label.items()},
    }


def signature_from_json(obj: Any) -> Signature:
    keys = ("directions", "opposite", "labels", "initial_labels", "dirs_of_label")
    _fields(obj, "signature", keys)
    dol = obj["dirs_of_label"]
    if not isinstance(dol, dict):
        raise SchemaError("signature.dirs_of_label: expected an object")
    for a, ds in dol.items():
        _strs(ds, f"signature.dirs_of_label[{a!r}]")
    return Signature(
        _strs(obj["directions"], "signature.directions"),
        _str_map(obj["opposite"], "signature.opposite"),
        _strs(obj["labels"], "signature.labels"),
        _strs(obj["initial_labels"], "signature.initial_labels"),
        dol,
    )


def graph_to_json(g: Graph) -> dict:
    return {
        "nodes": list(g.nodes),
        "initial": g.initial,
        "labels": {v: g.labels[v] for v in g.nodes if v in g.labels},
        "edges": {v: dict(g.edges[v]) for v in g.nodes},
    }


def graph_from_json(obj: Any) -> Graph:
    _fields(obj, "graph", ("nodes", "initial", "labels", "edges"))
    if not isinstance(obj["initial"], str):
        raise SchemaError("graph.initial: expected a string")
    edges = obj["edges"]
    if not isinstance(edges, dict):
        raise SchemaError("graph.edges: expected an object")
    for v, m in edges.items():
        _str_map(m, f"graph.edges[{v!r}]")
    return Graph(_strs(obj["nodes"], "graph.nodes"), obj["initial"],
                 _str_map(obj["labels"], "graph.labels"), edges)


# --- solver -------------------------------------------------------------------


def vector_to_json(x: BalancedVector) -> dict:
    return {"counts": dict(x.counts)}


def vector_from_json(obj: Any) -> BalancedVector:
    _fields(obj, "vector", ("counts",))
    counts = obj["counts"]
    if not isinstance(counts, dict) or not all(
        isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in counts.values()
    ):
        raise SchemaError("vector.counts: expected an object of non-negative integers")
    return BalancedVector(counts)


def verdict_to_json(v: Verdict) -> dict:
    if v.nonempty:
        return {"verdict": "nonempty", "witness": graph_to_json(v.witness)}
    return {"verdict": "empty"}


def verdict_from_json(obj: Any) -> Verdict:
    if isinstance(obj, dict) and obj.get("verdict") == "empty":
        _fields(obj, "verdict", ("verdict",))
        return Verdict(False)
    _fields(obj, "verdict", ("verdict", "witness"))
    if obj["verdict"] != "nonempty":
        raise SchemaError(f"verdict: unknown verdict {obj['verdict']!r}")
    return Verdict(True, witness=graph_from_json(obj["witness"]))


# --- graph-walking automata ---------------------------------------------------


def gwa_to_json(A: GraphWalkingAutomaton) -> dict:
    order = {q: i for i, q in enumerate(A.states)}
    return {
        "states": list(A.states),
        "initial": A.initial,
        "accept": [list(p) for p in sorted(A.accept, key=lambda p: (order.get(p[0], -1), p[1]))],
        "delta": {f"{q},{a}": list(t) for (q, a), t in A.delta.items()},
    }


def _split_key(key: str, states: set[str]) -> tuple[str, str]:
    cuts = [i for i, c in enumerate(key) if c == "," and key[:i] in states]
    if len(cuts) != 1:
        raise SchemaError(f"gwa.delta: cannot split key {key!r} into state,label")
    i = cuts[0]
    return key[:i], key[i + 1:]


def gwa_from_json(obj: Any) -> GraphWalkingAutomaton:
    _fields(obj, "gwa", ("states", "initial", "accept", "delta"))
    states = _strs(obj["states"], "gwa.states")
    if not isinstance(obj["initial"], str):
        raise SchemaError("gwa.initial: expected a string")
    accept = obj["accept"]
    if not isinstance(accept, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p)
        for p in accept
    ):
        raise SchemaError("gwa.accept: expected a list of [state, label] pairs")
    raw = obj["delta"]
    if not isinstance(raw, dict):
        raise SchemaError("gwa.delta: expected an object")
    known = set(states)
    delta = {}
    for key, t in raw.items():
        if not (isinstance(t, list) and len(t) == 2 and all(isinstance(x, str) for x in t)):
            raise SchemaError(f"gwa.delta[{key!r}]: expected [state, direction]")
        delta[_split_key(key, known)] = tuple(t)
    return GraphWalkingAutomaton(states, obj["initial"], [tuple(p) for p in accept], delta)


def run_to_json(r: RunResult) -> dict:
    out: dict = {
        "outcome": r.outcome,
        "final": {"state": r.final.state, "node": r.final.node},
        "steps": r.steps,
    }
    if r.repeated is not None:
        out["repeated"] = {"state": r.repeated.state, "node": r.repeated.node}
    if r.trace is not None:
        out["trace"] = [[c.state, c.node] for c in r.trace]
    return out


def run_from_json(obj: Any) -> RunResult:
    _fields(obj, "run", ("outcome", "final", "steps"), ("repeated", "trace"))

    def conf(c):
        _fields(c, "run configuration", ("state", "node"))
        return Configuration(c["state"], c["node"])

    trace = obj.get("trace")
    return RunResult(
        obj["outcome"],
        conf(obj["final"]),
        obj["steps"],
        tuple(Configuration(*c) for c in trace) if trace is not None else None,
        conf(obj["repeated"]) if "repeated" in obj else None,
    )


# --- star automata ----------------------------------------------------------


def star_automaton_to_json(A: StarAutomaton) -> dict:
    return {
        "states": list(A.states),
        "stars": [{"label": t.label, "centre": t.centre, "rays": list(t.rays)} for t in A.stars],
    }


def star_automaton_from_json(obj: Any) -> StarAutomaton:
    _fields(obj, "star automaton", ("states", "stars"))
    stars = obj["stars"]
    if not isinstance(stars, list):
        raise SchemaError("star automaton.stars: expected a list")
    out = []
    for t in stars:
        _fields(t, "star", ("label", "centre", "rays"))
        out.append(Star(t["label"], t["centre"], _strs(t["rays"], "star.rays")))
    return StarAutomaton(_strs(obj["states"], "star automaton.states"), out)


def tiling_to_json(t: Mapping[str, str]) -> dict:
    return {"state_of": dict(t)}


def tiling_from_json(obj: Any) -> dict[str, str]:
    _fields(obj, "tiling", ("state_of",))
    return dict(_str_map(obj["state_of"], "tiling.state_of"))


# --- hardness inputs ---------------------------------------------------------


def simple_graph_to_json(G: SimpleGraph) -> dict:
    return {"vertices": list(G.vertices), "edges": [list(e) for e in G.edges]}


def simple_graph_from_json(obj: Any) -> SimpleGraph:
    _fields(obj, "simple graph", ("vertices", "edges"))
    edges = obj["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in edges
    ):
        raise SchemaError("simple graph.edges: expected a list of [u, v] pairs")
    return SimpleGraph(_strs(obj["vertices"], "simple graph.vertices"),
                       [_strs(e, "simple graph edge") for e in edges])


def tm_to_json(M: TuringMachine) -> dict:
    return {
        "states": list(M.states),
        "input_alphabet": list(M.input_alphabet),
        "work_alphabet": list(M.work_alphabet),
        "blank": M.blank,
        "initial": list(M.initial),
        "accept": [list(p) for p in sorted(M.accept)],
        "delta": [{"from": list(k), "to": list(t)} for k, t in M.transitions],
    }


def tm_from_json(obj: Any) -> TuringMachine:
    keys = ("states", "input_alphabet", "work_alphabet", "blank", "initial", "accept", "delta")
    _fields(obj, "turing machine", keys)
    transitions = []
    for t in obj["delta"]:
        _fields(t, "transition", ("from", "to"))
        src, dst = _strs(t["from"], "transition.from"), _strs(t["to"], "transition.to")
        if len(src) != 2 or len(dst) != 3:
            raise SchemaError("transition: expected from=[q, sym], to=[q', sym', move]")
        transitions.append((tuple(src), tuple(dst)))
    accept = obj["accept"]
    if not isinstance(accept, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in accept
    ):
        raise SchemaError("turing machine.accept: expected a list of [state, symbol] pairs")
    if not isinstance(obj["blank"], str):
        raise SchemaError("turing machine.blank: expected a string")
    return TuringMachine(
        _strs(obj["states"], "turing machine.states"),
        _strs(obj["input_alphabet"], "turing machine.input_alphabet"),
        _strs(obj["work_alphabet"], "turing machine.work_alphabet"),
        obj["blank"],
        transitions,
        _strs(obj["initial"], "turing machine.initial"),
        [tuple(p) for p in accept],
    )


def computation_from_json(obj: Any) -> list[TMConfig]:
    """A run as ``[{"state": q, "head": i, "tape": [...]}, ...]``."""
    if not isinstance(obj, list):
        raise SchemaError("computation: expected a list of configurations")
    out = []
    for c in obj:
        _fields(c, "configuration", ("state", "head", "tape"))
        if not isinstance(c["head"], int):
            raise SchemaError("configuration.head: expected an integer")
        out.append(TMConfig(c["state"], c["head"], tuple(_strs(c["tape"], "configuration.tape"))))
    return out


def computation_to_json(comp) -> list[dict]:
    return [{"state": c.state, "head": c.head, "tape": list(c.tape)} for c in comp]
