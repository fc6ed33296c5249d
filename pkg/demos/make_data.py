"""Regenerate the JSON inputs in demos/data used by the CLI walkthrough."""

from pathlib import Path

from graphwalk import Graph, GraphWalkingAutomaton, Signature, jsonio
from graphwalk.hardness import SimpleGraph, TMConfig, TuringMachine, gen_universal_star_automaton

OUT = Path(__file__).resolve().parent / "data"


def write(name, obj):
    (OUT / name).write_text(jsonio.dumps(obj) + "\n")


line = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0", "a", "e"], ["a0"],
                 {"a0": ["r"], "a": ["l", "r"], "e": ["l"]})
loop = Signature(["s"], {"s": "s"}, ["a0"], ["a0"], {"a0": ["s"]})
odd = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0"], ["a0"], {"a0": ["r"]})
write("sig-line.json", jsonio.signature_to_json(line))
write("sig-loop.json", jsonio.signature_to_json(loop))
write("sig-odd.json", jsonio.signature_to_json(odd))

path = Graph(["u", "v"], "u", {"u": "a0", "v": "e"}, {"u": {"r": "v"}, "v": {"l": "u"}})
write("line-path.json", jsonio.graph_to_json(path))

right = GraphWalkingAutomaton(["q0"], "q0", [("q0", "e")],
                              {("q0", "a0"): ("q0", "r"), ("q0", "a"): ("q0", "r")})
bounce = GraphWalkingAutomaton(["q0"], "q0", [], {("q0", "a0"): ("q0", "r"),
                                                  ("q0", "e"): ("q0", "l"),
                                                  ("q0", "a"): ("q0", "r")})
write("gwa-right.json", jsonio.gwa_to_json(right))
write("gwa-bounce.json", jsonio.gwa_to_json(bounce))

write("star-universal-line.json", jsonio.star_automaton_to_json(gen_universal_star_automaton(line)))
write("tiling-all-q.json", jsonio.tiling_to_json({"u": "q", "v": "q"}))

write("k3.json", jsonio.simple_graph_to_json(SimpleGraph("xyz", ["xy", "yz", "xz"])))
write("k4.json", jsonio.simple_graph_to_json(
    SimpleGraph("abcd", [(a, b) for a in "abcd" for b in "abcd" if a < b])))

M = TuringMachine(["q"], ["a"], ["a", "_"], "_", [], ["q"], [("q", "a")])
write("tm-accept.json", jsonio.tm_to_json(M))
write("run-accept.json", jsonio.computation_to_json([TMConfig("q", 0, ("a",))]))

M2 = TuringMachine(["q0", "q1", "qf"], ["a"], ["a", "b", "_"], "_",
                   [(("q0", "a"), ("q1", "b", "R")), (("q1", "_"), ("qf", "_", "L"))],
                   ["q0"], [("qf", "b")])
write("tm-two-steps.json", jsonio.tm_to_json(M2))
write("run-two-steps.json", jsonio.computation_to_json(
    [TMConfig("q0", 0, ("a",)), TMConfig("q1", 1, ("b",)), TMConfig("qf", 0, ("b",))]))
