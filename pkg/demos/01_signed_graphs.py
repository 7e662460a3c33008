"""A tour of the signed-graph core: balance, witnesses, and switching.

A signed graph puts a +1 or -1 on every edge.  A vertex set is balanced
when its induced subgraph has no cycle whose signs multiply to -1; these
balanced sets are the color classes of everything downstream.
"""
from fracbal import (
    is_balanced,
    negative_cycle_witness,
    parse_graph,
    serialize_graph,
    switch,
    w_hat,
)

g = w_hat().graph
print("the 10-vertex core gadget:")
print(f"  {len(g.vertices)} vertices, {len(g.edges)} edges")
print(f"  positive edges: {[(a, b) for a, b, s in g.edges if s == 1]}")

print("\nbalance is about induced cycle signs:")
five_cycle = ("u", "v", "w", "x1", "x4")
print(f"  {five_cycle} balanced? {is_balanced(g, five_cycle)} (its 5-cycle is positive)")

bad = ("u", "x2", "w", "x4", "v")
wit = negative_cycle_witness(g, bad)
print(f"  {bad} balanced? {is_balanced(g, bad)}")
print(f"  witness cycle: {' - '.join(wit.vertices)} (sign {wit.sign})")

print("\nswitching negates the edges across a vertex cut and preserves")
print("every cycle sign, so balance is invariant:")
cut = ("w", "x1", "z")
switched = switch(g, cut)
print(f"  after switching at {cut}:")
print(f"    {five_cycle} still balanced? {is_balanced(switched, five_cycle)}")
print(f"    {bad} still unbalanced? {not is_balanced(switched, bad)}")
print(f"  switching twice restores the graph: {switch(switched, cut) == g}")

print("\ngraphs serialize to a stable JSON schema and round-trip:")
text = serialize_graph(g)
print("  " + text.splitlines()[0] + " ...")
print(f"  parse(serialize(g)) == g: {parse_graph(text) == g}")
