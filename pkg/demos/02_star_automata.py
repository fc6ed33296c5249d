# %% [markdown]
# # Tiling graphs with stars
#
# A star automaton accepts a graph when every node can be given a state
# so that the node's state, together with its neighbours' states, forms
# one of the allowed stars.  Emptiness reduces to a signature whose
# labels are the stars themselves.

# %%
from graphwalk import (
    Graph,
    Signature,
    Star,
    StarAutomaton,
    decode_tiling,
    encode_tiling,
    find_tiling,
    reduce_star_to_signature,
    star_bound,
    star_nonempty,
)

line = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0", "a", "e"], ["a0"],
                 {"a0": ["r"], "a": ["l", "r"], "e": ["l"]})
path = Graph(["u", "w", "v"], "u", {"u": "a0", "w": "a", "v": "e"},
             {"u": {"r": "w"}, "w": {"l": "u", "r": "v"}, "v": {"l": "w"}})

# %% [markdown]
# States must alternate along the path, and the end must be `q`.

# %%
A = StarAutomaton(["p", "q"], [Star("a0", "q", ["p"]), Star("a", "p", ["q", "q"]),
                               Star("e", "q", ["p"]), Star("a", "q", ["p", "p"])])
t = find_tiling(line, A, path)
print(t)

# %%
red = reduce_star_to_signature(line, A)
print(len(red.labels), "labels,", len(red.directions), "directions")
gp = encode_tiling(line, A, path, t)
print(gp.edges["u"])
assert decode_tiling(gp) == (path, t)

# %% [markdown]
# The smallest accepted graph, and the closed-form size bound.

# %%
v = star_nonempty(line, A)
print(len(v.witness), "nodes, tiling", v.tiling, "bound", star_bound(line, A))
