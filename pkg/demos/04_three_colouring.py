# %% [markdown]
# # 3-colourability as signature emptiness
#
# Each vertex gets three candidate labels, one per colour, and each edge
# gets a label per ordered pair of different colours.  Graphs over the
# signature are subdivisions of the input carrying a proper colouring.

# %%
from graphwalk import signature_nonempty
from graphwalk.hardness import SimpleGraph, extract_coloring, gen_3col_signature

triangle = SimpleGraph("xyz", ["xy", "yz", "xz"])
sig = gen_3col_signature(triangle)
print(len(sig.labels), "labels")
v = signature_nonempty(sig)
print(len(v.witness), "nodes", extract_coloring(triangle, v.witness))

# %%
k4 = SimpleGraph("abcd", [(a, b) for a in "abcd" for b in "abcd" if a < b])
print("K4 colourable:", signature_nonempty(gen_3col_signature(k4)).nonempty)

# %% [markdown]
# Wheel with five spokes: odd rim plus a hub, so 4 colours are needed.

# %%
rim = [f"r{i}" for i in range(5)]
wheel = SimpleGraph(["h", *rim], [("h", r) for r in rim]
                    + [(rim[i], rim[(i + 1) % 5]) for i in range(5)])
print("W5 colourable:", signature_nonempty(gen_3col_signature(wheel)).nonempty)
