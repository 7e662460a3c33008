"""Exhaustive and maximal enumeration of balanced / acyclic vertex sets.

Both properties are hereditary (every subset of a good set is good), so a
branch-and-prune over include/exclude decisions in canonical vertex order
never needs to look below a failed inclusion.  Maximality is certified at
each leaf by testing every single-vertex extension, which is sound exactly
because of heredity.

The include branch is explored first, which fixes the output order without
a sorting pass; results are identical across runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .gadgets import GadgetGraph
from .sgraph import GraphError, ParityDSU, SignedGraph, canonical_set

MAXIMAL_SIZE_GUARD = 24
FULL_SIZE_GUARD = 16


class GuardExceeded(RuntimeError):
    """Instance too large for exhaustive enumeration."""


class SetProperty(Enum):
    BALANCED = "balanced"
    ACYCLIC = "acyclic"


@dataclass(frozen=True)
class SetFamily:
    host: SignedGraph
    property: SetProperty
    sets: tuple[tuple[str, ...], ...]
    maximal_only: bool = False

    def __post_init__(self) -> None:
        for s in self.sets:
            if not _satisfies(self.host, self.property, s):
                raise GraphError(f"set {s} violates {self.property.value}")


def _satisfies(g: SignedGraph, prop: SetProperty, members: Iterable[str]) -> bool:
    from .sgraph import is_acyclic, is_balanced

    if prop is SetProperty.BALANCED:
        return is_balanced(g, members)
    return is_acyclic(g, members)


class _Search:
    """Shared incremental state: a rollback union-find over chosen vertices."""

    def __init__(
        self,
        g: SignedGraph,
        prop: SetProperty,
        avoid: Sequence[frozenset[str]] = (),
    ) -> None:
        self.g = g
        self.prop = prop
        self.dsu = ParityDSU(len(g.vertices))
        self.idx = g.index
        self.chosen: set[str] = set()
        self.avoid = avoid

    def try_add(self, v: str) -> int | None:
        """Attach v to the current set; returns a rollback mark or None."""
        for a in self.avoid:
            if v in a and a <= self.chosen | {v}:
                return None
        mark = self.dsu.mark()
        vi = self.idx[v]
        for w, sign in self.g.adj[v].items():
            if w not in self.chosen:
                continue
            wi = self.idx[w]
            if self.prop is SetProperty.ACYCLIC:
                ra, _ = self.dsu.find(vi)
                rb, _ = self.dsu.find(wi)
                if ra == rb:
                    self.dsu.rollback(mark)
                    return None
                self.dsu.union(vi, wi, False)
            else:
                if not self.dsu.union(vi, wi, sign < 0):
                    self.dsu.rollback(mark)
                    return None
        self.chosen.add(v)
        return mark

    def remove(self, v: str, mark: int) -> None:
        self.chosen.remove(v)
        self.dsu.rollback(mark)

    def extendable_by(self, v: str) -> bool:
        mark = self.try_add(v)
        if mark is None:
            return False
        self.remove(v, mark)
        return True


def enumerate_sets(
    g: SignedGraph,
    prop: SetProperty,
    *,
    maximal_only: bool = False,
    must_contain: Sequence[str] = (),
    forbid: Sequence[str] = (),
    avoid: Sequence[Iterable[str]] = (),
    size_guard: int | None = None,
) -> SetFamily:
    """All nonempty vertex sets with the property, optionally only the
    maximal ones, under containment constraints.

    ``avoid`` lists vertex sets that must not be fully contained; this
    constraint is hereditary like the property itself, so maximality is
    certified within the constrained family.  Maximality is relative to the
    allowed universe (vertices outside ``forbid``).  Raises GuardExceeded
    when the host is too large for exhaustive search.
    """
    guard = size_guard if size_guard is not None else (
        MAXIMAL_SIZE_GUARD if maximal_only else FULL_SIZE_GUARD
    )
    if len(g.vertices) > guard:
        raise GuardExceeded(
            f"{len(g.vertices)} vertices exceeds guard {guard};"
            " consider column generation"
        )
    need = canonical_set(g, must_contain)
    banned = set(canonical_set(g, forbid))
    if banned & set(need):
        raise GraphError("must_contain and forbid overlap")

    search = _Search(g, prop, tuple(frozenset(a) for a in avoid))
    for v in need:
        if search.try_add(v) is None:
            return SetFamily(g, prop, (), maximal_only)

    candidates = [v for v in g.vertices if v not in search.chosen and v not in banned]
    out: list[tuple[str, ...]] = []

    def emit() -> None:
        if maximal_only:
            for w in candidates:
                if w not in search.chosen and search.extendable_by(w):
                    return
        if search.chosen:
            out.append(tuple(sorted(search.chosen, key=g.index.__getitem__)))

    def walk(i: int) -> None:
        if i == len(candidates):
            emit()
            return
        v = candidates[i]
        mark = search.try_add(v)
        if mark is not None:
            walk(i + 1)
            search.remove(v, mark)
        walk(i + 1)

    walk(0)
    return SetFamily(g, prop, tuple(out), maximal_only)


def triangles_missed(s: Iterable[str], marked: Sequence[tuple[str, ...]]) -> list[int]:
    """Indices of marked triangles disjoint from s."""
    inside = set(s)
    return [i for i, t in enumerate(marked) if not inside & set(t)]


def lemma_case_sets(
    g: GadgetGraph, positive_faces: Sequence[tuple[str, str, str]]
) -> tuple[tuple[str, ...], ...]:
    """The balanced-set case universe for the missing-triangle argument.

    Two kinds of balanced sets containing both terminals matter: the maximal
    ones outright, and the maximal ones among sets that contain no full
    positive face (a set swallowing a positive face cannot be grown past it,
    yet its face-avoiding subsets branch differently).  The union of the two
    enumerations, in canonical order, is the complete case list.
    """
    u = g.terminal("u")
    v = g.terminal("v")
    plain = enumerate_sets(
        g.graph, SetProperty.BALANCED, maximal_only=True, must_contain=(u, v)
    )
    avoiding = enumerate_sets(
        g.graph,
        SetProperty.BALANCED,
        maximal_only=True,
        must_contain=(u, v),
        avoid=positive_faces,
    )
    seen: list[tuple[str, ...]] = []
    for s in plain.sets + avoiding.sets:
        if s not in seen:
            seen.append(s)
    seen.sort(key=lambda s: tuple(g.graph.index[x] for x in s))
    return tuple(seen)


def check_missing_triangle_lemma(g: GadgetGraph) -> tuple[bool, tuple[str, ...] | None]:
    """Does every maximal balanced set containing both terminals miss at
    least one marked triangle?

    Heredity makes maximal sets sufficient: a counterexample extends to a
    maximal counterexample.  Returns (False, witness set) on failure.
    """
    u = g.terminal("u")
    v = g.terminal("v")
    fam = enumerate_sets(
        g.graph, SetProperty.BALANCED, maximal_only=True, must_contain=(u, v)
    )
    for s in fam.sets:
        if not triangles_missed(s, g.marked_triangles):
            return False, s
    return True, None


@dataclass(frozen=True)
class ForestLemmaReport:
    max_order: int
    max_order_with_terminals: int
    top_sets_with_u: int
    top_sets_with_u_hitting_hubs: int

    @property
    def hubs_ok(self) -> bool:
        return self.top_sets_with_u == self.top_sets_with_u_hitting_hubs


def check_forest_lemmas(
    g: GadgetGraph, hubs: Sequence[str] = ("z", "t", "x1")
) -> ForestLemmaReport:
    """Brute-force acyclic-set facts for the 10-vertex core graph.

    Scans all vertex subsets and reports the maximum induced-forest order,
    the maximum containing both terminals, and whether every maximum-order
    forest containing u includes at least two of the hub vertices.
    """
    graph = g.graph
    n = len(graph.vertices)
    if n > 20:
        raise GuardExceeded(f"{n} vertices is too many for a full subset scan")
    u = g.terminal("u")
    v = g.terminal("v")
    hub_set = set(hubs)
    verts = graph.vertices
    max_order = 0
    max_uv = 0
    acyclic_sets: list[tuple[str, ...]] = []
    for bits in range(1 << n):
        s = tuple(verts[i] for i in range(n) if bits >> i & 1)
        if not _satisfies(graph, SetProperty.ACYCLIC, s):
            continue
        acyclic_sets.append(s)
        if len(s) > max_order:
            max_order = len(s)
        if u in s and v in s and len(s) > max_uv:
            max_uv = len(s)
    with_u = [s for s in acyclic_sets if len(s) == max_order and u in s]
    hitting = [s for s in with_u if len(hub_set & set(s)) >= 2]
    return ForestLemmaReport(max_order, max_uv, len(with_u), len(hitting))
