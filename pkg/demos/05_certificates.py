"""The shipped reference colorings and the audits that interrogate them.

Four fixture certificates cover the core gadget: a (172, 85) balanced
coloring whose terminals share 28 colors, two (83, 41) colorings with
terminal overlaps 13 and 14, and a (52, 25) forest coloring.  The audits
count overlaps, colors missing a triangle, and colors on a full triangle.
"""
from fracbal import (
    m_upper_bound,
    BoundParams,
    overlap,
    profile,
    triangle_common_count,
    triangle_missing_count,
    verify,
    w_hat,
)
from fracbal.tables import (
    w_coloring_172_85,
    w_coloring_83_41_uv13,
    w_coloring_83_41_uv14,
    w_forest_52_25,
)

wh = w_hat()

cert = w_coloring_172_85()
rep = verify(wh.graph, cert)
print(f"(172, 85) certificate: verifies {rep.ok}, {len(cert.classes)} distinct classes")
print(f"  overlap(u, v) = {overlap(cert, 'u', 'v')}"
      f"  (equals 7 * (2p - 4q) = {7 * m_upper_bound(BoundParams(172, 85))})")
print("  colors missing each marked negative triangle:",
      [triangle_missing_count(cert, t) for t in wh.marked_triangles])
print("  colors on a full positive face:",
      [triangle_common_count(cert, t) for t in (("u", "x1", "x2"), ("v", "x3", "x4"))])

for cert, tag in ((w_coloring_83_41_uv13(), 13), (w_coloring_83_41_uv14(), 14)):
    rep = verify(wh.graph, cert)
    edges14 = sum(
        1 for a, b, _ in wh.graph.edges
        if {a, b} != {"u", "v"} and overlap(cert, a, b) == 14
    )
    print(f"\n(83, 41) with terminal overlap {tag}: verifies {rep.ok};"
          f" {edges14}/23 other edges at overlap 14")

cert = w_forest_52_25()
rep = verify(wh.graph, cert)
print(f"\n(52, 25) forest certificate: verifies {rep.ok}")
prof = profile(cert, ("u", "v", "z", "x1", "t"))
print("  overlaps at u:",
      {pair: ov for pair, ov in prof.pairs if "u" in pair})
