"""The exact inequality chains and where the three magic ratios come from.

A color missing a negative face of an apex block costs a pair of color
slots, which caps the miss count at 2p - 4q; iterating the construction
multiplies misses by 21 per level and the interplay of the two bounds
pins the achievable ratios.
"""
from fractions import Fraction

from fracbal import (
    BoundParams,
    arboricity_counting_check,
    first_infeasible_index,
    m_upper_bound,
    mu_bound,
    mu_recurrence,
    threshold_52_25,
    threshold_83_41,
    threshold_172_85,
)

print("miss-count cap 2p - 4q:")
for p, q in ((172, 85), (83, 41), (2, 1)):
    print(f"  ({p}, {q}): {m_upper_bound(BoundParams(p, q))}")

print("\nthe iterated bound (closed form equals the recurrence):")
for p, q in ((2, 1), (83, 41)):
    bp = BoundParams(p, q)
    vals = [mu_bound(bp, i) for i in range(4)]
    assert vals == [mu_recurrence(bp, i) for i in range(4)]
    print(f"  ({p}, {q}): {vals}")

print("\nwhen the bound goes negative the ratio is infeasible at that depth:")
for p, q in ((2, 1), (168, 83), (83, 41)):
    idx = first_infeasible_index(BoundParams(p, q))
    print(f"  ({p}, {q}) = {Fraction(p, q)}: first infeasible depth {idx}")

print("\nthresholds derived by solving the inequality systems:")
print(f"  chromatic limit of the iteration: {threshold_83_41()}")
print(f"  exact value on the K4 assembly:   {threshold_172_85()}")
print(f"  arboricity of the triple-copy graph: {threshold_52_25()}")

print("\nthe arboricity counting pair at the tight point:")
print(f"  (52, 25, a=10, a_uv=10): {arboricity_counting_check(52, 25, 10, 10)}")
print(f"  (52, 25, a=11, a_uv=10): {arboricity_counting_check(52, 25, 11, 10)}")
