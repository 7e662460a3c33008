"""Exact fractional optima as covering LPs over balanced or acyclic sets.

Everything is a fractions.Fraction; every optimum comes back with primal
and dual certificates that are re-verified before being returned, so the
printed values are proofs, not approximations.
"""
from fractions import Fraction

from fracbal import (
    SetProperty,
    SignedGraph,
    a_f,
    chi_fb,
    column_generation,
    k3_minus,
    k4_minus,
    lp_to_certificate,
    Mode,
    verify,
    w_hat,
)

print("fractional balanced chromatic numbers:")
for name, g in (("all-negative triangle", k3_minus().graph),
                ("all-negative K4", k4_minus().graph),
                ("core gadget", w_hat().graph)):
    res = chi_fb(g)
    print(f"  {name}: {res.optimum}")

c4 = SignedGraph(
    ("a", "b", "c", "d"),
    (("a", "b", -1), ("b", "c", -1), ("c", "d", -1), ("a", "d", -1)),
)
print("\nfractional arboricity:")
print(f"  4-cycle: {a_f(c4).optimum}")
print(f"  core gadget: {a_f(w_hat().graph).optimum}")

res = chi_fb(k3_minus().graph)
print("\na certificate for the triangle's 3/2:")
for s, w in res.primal:
    print(f"  weight {w} on {{{', '.join(s)}}}")
print(f"  dual vertex weights: {dict(res.dual)}")

cert = lp_to_certificate(res, Mode.BALANCED)
print(f"\nscaled to integers: a ({cert.p}, {cert.q})-coloring, "
      f"verifies: {verify(k3_minus().graph, cert).ok}")

print("\ncolumn generation reaches the same optima from singleton columns:")
cg = column_generation(k4_minus().graph, SetProperty.BALANCED)
print(f"  all-negative K4: {cg.optimum} after {cg.iterations} pricing rounds")
cg = column_generation(c4, SetProperty.ACYCLIC)
print(f"  4-cycle: {cg.optimum} with {cg.columns} columns")
