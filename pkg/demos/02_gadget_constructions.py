"""Building the gadget family: completions, substitutions, gluings.

Starting from the 10-vertex core, two surgery operations assemble every
graph the toolkit studies: replacing an edge by a gadget copy whose
terminal edge is identified with it, and gluing a negative triangle of one
gadget onto another.
"""
from fracbal import (
    g_hat_k3,
    g_sequence,
    k4_minus,
    substitute_edge,
    triangle_sign,
    u_hat,
    w1_underlying,
    w_double_prime,
    w_hat,
    w_prime,
)

for name, g in (
    ("core gadget", w_hat()),
    ("with completed positive faces", w_prime()),
    ("with apex blocks in all 7 marked faces", w_double_prime()),
):
    print(f"{name}: {len(g.graph.vertices)} vertices, "
          f"{len(g.marked_triangles)} marked triangles")

wp = w_prime()
print("\nevery marked triangle is negative:",
      all(triangle_sign(wp.graph, t) == -1 for t in wp.marked_triangles))

print("\nedge substitution puts a fresh gadget copy on an edge;")
print("the copy's terminal pair is identified with the edge endpoints:")
host = substitute_edge(w_hat(), ("u", "v"), w_prime(), suffix="demo")
print(f"  host 10 vertices + copy 16 - 2 identified = {len(host.graph.vertices)}")

print("\nthe assembled family:")
print(f"  K4 with a 16-vertex copy per edge: {len(u_hat().graph.vertices)} vertices,"
      f" {len(u_hat().marked_triangles)} marked triangles")
print(f"  triangle with a 23-vertex copy per edge: {len(g_hat_k3().graph.vertices)} vertices")
g1 = g_sequence(1)
print(f"  level-1 iterated gadget: {len(g1.graph.vertices)} vertices")
print(f"  level-0 is the all-negative K4: {len(g_sequence(0).graph.vertices)} vertices"
      f" (same graph as k4_minus: {g_sequence(0).graph == k4_minus().graph})")

w1 = w1_underlying()
print(f"\nunsigned arboricity instance: {len(w1.graph.vertices)} vertices;"
      f" u-z kept as an edge after substitution: {w1.graph.has_edge('u', 'z')}")
