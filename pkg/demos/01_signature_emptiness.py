# %% [markdown]
# # Which signatures admit a graph?
#
# A signature fixes the labels a node may carry and, for each label, the
# exact set of outgoing directions.  Every edge is traversable both ways:
# leaving along `r` means arriving along the opposite `l`.  So a graph
# exists only if the direction counts balance out.

# %%
from graphwalk import (
    Signature,
    build_graph,
    direction_pairing,
    find_balanced_vector,
    node_count_bound,
    signature_nonempty,
)

line = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0", "a", "e"], ["a0"],
                 {"a0": ["r"], "a": ["l", "r"], "e": ["l"]})

# %% [markdown]
# Each label contributes +1 per `r` end and -1 per `l` end.  A count
# vector with exactly one initial node and zero total imbalance is
# realisable.

# %%
print(direction_pairing(line))
v = find_balanced_vector(line)
print(v.counts, "total", v.total, "bound", node_count_bound(line))

# %%
g = build_graph(line, v.counts)
print(g.nodes, g.labels, g.edges)

# %% [markdown]
# The exact search and the MILP route pick the same smallest vector.

# %%
assert find_balanced_vector(line, "search") == find_balanced_vector(line, "milp")

# %% [markdown]
# One `r` end and nothing to absorb it: no graph at all.

# %%
odd = Signature(["r", "l"], {"r": "l", "l": "r"}, ["a0"], ["a0"], {"a0": ["r"]})
print("non-empty:", signature_nonempty(odd).nonempty)
