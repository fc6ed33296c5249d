# %% [markdown]
# # Exponential grids walked by a small automaton
#
# A binary tree of height 2n has 4^n leaves.  Each leaf hangs one grid
# node, and each grid node hangs a chain of 2n bits naming its row and
# column.  A graph-walking automaton with O(n) states checks that the
# grid nodes really form a 2^n x 2^n grid, then that the rows spell an
# accepting run of a Turing machine.

# %%
from graphwalk import Graph, simulate, validate_graph
from graphwalk.hardness import (
    TMConfig,
    TuringMachine,
    canonical_grid_graph,
    gen_grid_automaton,
    gen_grid_signature,
)
from graphwalk.hardness.grid import grid_label, grid_node, parse_grid_label

# rewrite a to b, step right onto the blank, step back and accept on b
M = TuringMachine(["q0", "q1", "qf"], ["a"], ["a", "b", "_"], "_",
                  [(("q0", "a"), ("q1", "b", "R")), (("q1", "_"), ("qf", "_", "L"))],
                  ["q0"], [("qf", "b")])
run = [TMConfig("q0", 0, ("a",)), TMConfig("q1", 1, ("b",)), TMConfig("qf", 0, ("b",))]

n = 2
sig = gen_grid_signature(n, M)
A = gen_grid_automaton(n, M, ["a"], f_bound_ok=True)
g = canonical_grid_graph(n, M, ["a"], run)
print(len(sig.labels), "labels,", len(A.states), "states,", len(g), "nodes")

# %%
for i in range(2**n):
    print(" ".join(g.labels[grid_node(i, j)] for j in range(2**n)))

# %%
result = simulate(sig, A, g)
print(result.outcome, "after", result.steps, "steps")

# %% [markdown]
# Writing the wrong symbol in the second row breaks the run.

# %%
labels = dict(g.labels)
pos, _, head = parse_grid_label(labels[grid_node(1, 0)])
labels[grid_node(1, 0)] = grid_label(pos, "a", head)
bad = Graph(g.nodes, g.initial, labels, g.edges)
assert validate_graph(sig, bad).ok
print(simulate(sig, A, bad).outcome)
