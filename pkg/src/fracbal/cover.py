"""Exact covering LP over a set family: fractional chromatic-style optima.

The optimum of  min sum w_S  s.t.  every vertex is covered with total
weight >= 1, w >= 0  over the balanced (resp. acyclic) sets of a graph is
its fractional balanced chromatic number (resp. fractional arboricity).
The LP is solved through its packing dual

    max sum y_v   s.t.   y(S) <= 1 for every family set S,  y >= 0,

whose all-slack basis is feasible; the cover weights are read off the
optimal dual multipliers.  Both certificates are re-verified with plain
rational arithmetic before anything is returned, so a returned LpResult is
itself a proof of optimality independent of the pivoting path.

``column_generation`` scales the same LP past full enumeration: a
restricted master over known columns plus an exact branch-and-bound pricer
that searches for a balanced/acyclic set of dual weight above 1.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

from .certify import Certificate, Mode
from .families import SetFamily, SetProperty, enumerate_sets, _Search
from .sgraph import SignedGraph
from .simplex import simplex_max


class CoverError(RuntimeError):
    """Uncovered vertex (family bug) or failed certificate re-verification."""


@dataclass(frozen=True)
class LpResult:
    """Exact optimum with primal (cover weights) and dual (vertex weights)
    certificates; invariant: both feasible and equal in value."""

    optimum: Fraction
    primal: tuple[tuple[tuple[str, ...], Fraction], ...]
    dual: tuple[tuple[str, Fraction], ...]

    def primal_weight(self, s: Iterable[str]) -> Fraction:
        key = tuple(s)
        for t, w in self.primal:
            if t == key:
                return w
        return Fraction(0)

    @property
    def dual_map(self) -> dict[str, Fraction]:
        return dict(self.dual)


def verify_cover_certificates(
    family: SetFamily,
    optimum: Fraction,
    primal: Sequence[tuple[tuple[str, ...], Fraction]],
    dual: Sequence[tuple[str, Fraction]],
) -> None:
    """Raise CoverError unless primal and dual are feasible with equal value."""
    weights = {s: w for s, w in primal}
    if any(w < 0 for w in weights.values()):
        raise CoverError("negative primal weight")
    coverage = {v: Fraction(0) for v in family.host.vertices}
    for s, w in weights.items():
        for v in s:
            coverage[v] += w
    if any(c < 1 for c in coverage.values()):
        raise CoverError("primal does not cover every vertex")
    y = dict(dual)
    if any(val < 0 for val in y.values()):
        raise CoverError("negative dual weight")
    for s in family.sets:
        if sum(y.get(v, Fraction(0)) for v in s) > 1:
            raise CoverError(f"dual violates set constraint for {s}")
    if sum(weights.values()) != optimum or sum(y.values()) != optimum:
        raise CoverError("certificate values do not match the optimum")


def fractional_cover_optimum(family: SetFamily) -> LpResult:
    """Exact optimum of the covering LP over ``family`` with certificates."""
    if not family.sets:
        raise CoverError("empty family")
    covered: set[str] = set()
    for s in family.sets:
        covered.update(s)
    missing = [v for v in family.host.vertices if v not in covered]
    if missing:
        raise CoverError(f"vertex {missing[0]!r} lies in no family set")

    verts = family.host.vertices
    col = {v: j for j, v in enumerate(verts)}
    one = Fraction(1)
    rows = []
    for s in family.sets:
        row = [Fraction(0)] * len(verts)
        for v in s:
            row[col[v]] = one
        rows.append(row)
    res = simplex_max(rows, [one] * len(rows), [one] * len(verts))

    primal = tuple(
        (family.sets[i], res.duals[i])
        for i in range(len(family.sets))
        if res.duals[i] != 0
    )
    dual = tuple((v, res.x[col[v]]) for v in verts)
    verify_cover_certificates(family, res.value, primal, dual)
    return LpResult(res.value, primal, dual)


def chi_fb(g: SignedGraph, *, size_guard: int | None = None) -> LpResult:
    """Fractional balanced chromatic number, via the LP over maximal
    balanced sets.

    Maximal sets suffice: enlarging a set only improves coverage, so some
    optimal cover uses maximal sets only.
    """
    fam = enumerate_sets(
        g, SetProperty.BALANCED, maximal_only=True, size_guard=size_guard
    )
    return fractional_cover_optimum(fam)


def a_f(g: SignedGraph, *, size_guard: int | None = None) -> LpResult:
    """Fractional arboricity: the same LP over maximal acyclic sets."""
    fam = enumerate_sets(
        g, SetProperty.ACYCLIC, maximal_only=True, size_guard=size_guard
    )
    return fractional_cover_optimum(fam)


def lp_to_certificate(result: LpResult, mode: Mode) -> Certificate:
    """Scale a fractional cover into an integer (p, q) certificate.

    q is the least common multiple of the weight denominators (the smallest
    uniform scaling making every repetition integral); p is the total
    repetition count.
    """
    weights = [(s, w) for s, w in result.primal if w > 0]
    q = reduce(lcm, (w.denominator for _, w in weights), 1)
    classes = [(s, int(w * q)) for s, w in weights]
    p = sum(rep for _, rep in classes)
    return Certificate.build(p, q, mode, classes)


@dataclass(frozen=True)
class ColumnGenResult:
    """Outcome of column generation: exact optimum when completed, or the
    best certified interval when the pricing budget ran out."""

    completed: bool
    lower: Fraction
    upper: Fraction
    result: LpResult | None
    iterations: int
    columns: int

    @property
    def optimum(self) -> Fraction | None:
        return self.result.optimum if self.completed and self.result else None


def _price(
    g: SignedGraph, prop: SetProperty, y: dict[str, Fraction]
) -> tuple[Fraction, tuple[str, ...]]:
    """Maximum-dual-weight set with the property, by branch and bound.

    Vertices are scanned in canonical order with the include branch first,
    so among equal-weight maximizers the first one found is kept, which is
    the lexicographically least improving column.
    """
    cand = [v for v in g.vertices if y.get(v, Fraction(0)) > 0]
    search = _Search(g, prop)
    best_w = Fraction(0)
    best_s: tuple[str, ...] = ()
    suffix = [Fraction(0)] * (len(cand) + 1)
    for i in range(len(cand) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + y[cand[i]]

    def walk(i: int, weight: Fraction) -> None:
        nonlocal best_w, best_s
        if weight + suffix[i] <= best_w:
            return
        if i == len(cand):
            if weight > best_w:
                best_w = weight
                best_s = tuple(sorted(search.chosen, key=g.index.__getitem__))
            return
        v = cand[i]
        mark = search.try_add(v)
        if mark is not None:
            walk(i + 1, weight + y[v])
            search.remove(v, mark)
        walk(i + 1, weight)

    walk(0, Fraction(0))
    return best_w, best_s


def column_generation(
    g: SignedGraph,
    prop: SetProperty,
    *,
    time_budget: float | None = None,
    max_iterations: int | None = None,
) -> ColumnGenResult:
    """Covering optimum by restricted-master simplex plus exact pricing.

    Starts from singleton columns (always feasible on loop-free graphs) and
    adds the maximum-dual-weight violating set until pricing proves no set
    has dual weight above 1.  On budget exhaustion, returns the certified
    interval [master dual value / best pricing weight, master optimum],
    which always contains the true optimum.
    """
    columns: list[tuple[str, ...]] = [(v,) for v in g.vertices]
    started = time.monotonic()
    iterations = 0
    lower = Fraction(0)
    master: LpResult | None = None
    while True:
        fam = SetFamily(g, prop, tuple(columns))
        master = fractional_cover_optimum(fam)
        y = master.dual_map
        best_w, best_s = _price(g, prop, y)
        iterations += 1
        if best_w <= 1:
            return ColumnGenResult(
                True, master.optimum, master.optimum, master, iterations, len(columns)
            )
        # y / best_w is dual feasible for the full family
        lower = max(lower, master.optimum / best_w)
        out_of_budget = (
            (time_budget is not None and time.monotonic() - started > time_budget)
            or (max_iterations is not None and iterations >= max_iterations)
        )
        if out_of_budget:
            return ColumnGenResult(
                False, lower, master.optimum, master, iterations, len(columns)
            )
        if best_s in columns:  # pricing stalled; should not happen
            raise CoverError("pricing returned a known column")
        columns.append(best_s)
