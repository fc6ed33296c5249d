# %% [markdown]
# # Graph-walking automata
#
# A deterministic automaton walks from the initial node, reading labels
# and following directions.  It accepts, gets stuck, or loops.

# %%
from graphwalk import (
    Graph,
    GraphWalkingAutomaton,
    Signature,
    decode_annotated,
    encode_accepting_run,
    gwa_bound,
    gwa_nonempty,
    reduce_gwa_to_signature,
    simulate,
)

line = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0", "a", "e"], ["a0"],
                 {"a0": ["r"], "a": ["l", "r"], "e": ["l"]})
path = Graph(["u", "w", "v"], "u", {"u": "a0", "w": "a", "v": "e"},
             {"u": {"r": "w"}, "w": {"l": "u", "r": "v"}, "v": {"l": "w"}})

# walk to the end and back, accept at the start
there_and_back = GraphWalkingAutomaton(
    ["q0", "q1"], "q0", [("q1", "a0")],
    {("q0", "a0"): ("q0", "r"), ("q0", "a"): ("q0", "r"), ("q0", "e"): ("q1", "l"),
     ("q1", "a"): ("q1", "l")},
)
run = simulate(line, there_and_back, path, trace=True)
print(run.outcome, run.steps, [c.node for c in run.trace])

# %%
bounce = GraphWalkingAutomaton(["q0"], "q0", [], {("q0", "a0"): ("q0", "r"),
                                                  ("q0", "a"): ("q0", "r"),
                                                  ("q0", "e"): ("q0", "l")})
print(simulate(line, bounce, path).outcome)

# %% [markdown]
# Emptiness: annotate every edge end with the states that cross it in
# each direction.  The annotated labels form a new signature.

# %%
red = reduce_gwa_to_signature(line, there_and_back)
print(len(red.labels), "annotated labels")
gp = encode_accepting_run(line, there_and_back, path)
print(gp.labels["w"])
assert decode_annotated(gp) == path

# %%
v = gwa_nonempty(line, there_and_back)
print(len(v.witness), "nodes;", v.run.outcome, "; bound", gwa_bound(line, there_and_back))
print("bounce non-empty:", gwa_nonempty(line, bounce).nonempty)
