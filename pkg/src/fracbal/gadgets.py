"""Gadget constructors and the two graph-surgery operations that combine them.

The building blocks are small planar signed graphs engineered so that the
two terminals u and v are forced to share few colors in any fractional
balanced coloring:

* ``w_hat``          10-vertex wheel-like core with terminals u, v
* ``w_prime``        w_hat with both positive faces completed by a 6-vertex
                     mini gadget (16 vertices, 7 marked negative triangles)
* ``w_double_prime`` w_prime with an apex inside each marked triangle,
                     turning it into an all-negative-K4 block (23 vertices)

Larger graphs are assembled by ``substitute_edge`` (replace an edge by a
gadget copy whose u-v edge is identified with it) and ``glue_triangle``
(identify a negative triangle of a guest with one of the host).  Copies are
switched where needed so that identified edges agree in sign; switching
preserves every cycle sign, so balance properties survive.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .sgraph import (
    GraphError,
    SignedGraph,
    canonical_set,
    triangle_sign,
)


class TraceError(ValueError):
    """A build trace step whose precondition fails; carries the step index."""

    def __init__(self, step: int, message: str) -> None:
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class GadgetGraph:
    """A signed graph plus named terminals and a set of marked triangles.

    Every marked triangle must be a negative 3-clique of the graph; this is
    validated on construction, so holding a GadgetGraph is itself a
    face-sign audit of its marked set.
    """

    graph: SignedGraph
    terminals: Mapping[str, str] = field(default_factory=dict)
    marked_triangles: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self) -> None:
        for role, v in self.terminals.items():
            if not self.graph.has_vertex(v):
                raise GraphError(f"terminal {role}={v!r} not in graph")
        for t in self.marked_triangles:
            if triangle_sign(self.graph, t) != -1:
                raise GraphError(f"marked triangle {t} is not negative")

    def terminal(self, role: str) -> str:
        try:
            return self.terminals[role]
        except KeyError:
            raise GraphError(f"gadget has no terminal {role!r}") from None


def _triple(g: SignedGraph, t: Iterable[str]) -> tuple[str, str, str]:
    s = canonical_set(g, t)
    if len(s) != 3:
        raise GraphError(f"expected 3 vertices, got {len(s)}")
    return s  # type: ignore[return-value]


def _fresh_name(g: SignedGraph, prefix: str) -> str:
    k = 1
    while f"{prefix}{k}" in g.index:
        k += 1
    return f"{prefix}{k}"


def k3_minus() -> GadgetGraph:
    """All-negative triangle on u1, u2, u3; the triangle is marked."""
    g = SignedGraph(
        ("u1", "u2", "u3"),
        (("u1", "u2", -1), ("u1", "u3", -1), ("u2", "u3", -1)),
    )
    return GadgetGraph(g, {}, (("u1", "u2", "u3"),))


def k4_minus() -> GadgetGraph:
    """All-negative K4 on u1..u4; all four triangles are marked."""
    names = ("u1", "u2", "u3", "u4")
    edges = tuple(
        (names[i], names[j], -1) for i in range(4) for j in range(i + 1, 4)
    )
    g = SignedGraph(names, edges)
    marked = (
        ("u1", "u2", "u3"),
        ("u1", "u2", "u4"),
        ("u1", "u3", "u4"),
        ("u2", "u3", "u4"),
    )
    return GadgetGraph(g, {}, marked)


def complete_negative_face(g: GadgetGraph, t: Iterable[str], apex: str | None = None) -> GadgetGraph:
    """Add an apex inside negative triangle ``t`` so the new K4 block is
    switching equivalent to the all-negative K4.

    Sign choice: the apex edge to the canonically least triangle vertex is
    -1; the other two signs are then forced by requiring every apex
    triangle to be negative.
    """
    graph = g.graph
    t1, t2, t3 = _triple(graph, t)
    if triangle_sign(graph, (t1, t2, t3)) != -1:
        raise GraphError(f"triangle {(t1, t2, t3)} is not negative")
    if apex is None:
        apex = _fresh_name(graph, "n")
    if graph.has_vertex(apex):
        raise GraphError(f"apex name {apex!r} already in graph")
    s1 = -1
    s2 = -s1 * graph.sign(t1, t2)
    s3 = -s1 * graph.sign(t1, t3)
    new = SignedGraph(
        graph.vertices + (apex,),
        graph.edges + ((t1, apex, s1), (t2, apex, s2), (t3, apex, s3)),
    )
    return GadgetGraph(new, g.terminals, g.marked_triangles)


def complete_positive_face(
    g: GadgetGraph,
    t: Iterable[str],
    prime_names: tuple[str, str, str] | None = None,
) -> GadgetGraph:
    """Complete a positive triangle with the 6-vertex mini gadget.

    Three new vertices are added, one "prime" per triangle vertex, where
    prime(t_i) is adjacent to the other two triangle vertices but not to
    t_i, and the primes form an all-negative inner triangle.  Signs are
    chosen so that the result is switching equivalent to the reference
    completion of an all-positive triangle: with s_i the product of the two
    triangle edges at t_i, edge t_i-prime(t_{i+1}) gets sign s_i and edge
    t_i-prime(t_{i+2}) gets sign -s_i (indices cyclic in canonical order).

    The inner triangle is appended to the marked set.
    """
    graph = g.graph
    tt = _triple(graph, t)
    if triangle_sign(graph, tt) != 1:
        raise GraphError(f"triangle {tt} is not positive")
    if prime_names is None:
        base = _fresh_name(graph, "m")
        prime_names = (base + "a", base + "b", base + "c")
    for name in prime_names:
        if graph.has_vertex(name):
            raise GraphError(f"vertex name {name!r} already in graph")
    e = [
        graph.sign(tt[0], tt[1]),  # e01
        graph.sign(tt[1], tt[2]),  # e12
        graph.sign(tt[0], tt[2]),  # e02
    ]
    s = (e[0] * e[2], e[0] * e[1], e[1] * e[2])  # two triangle edges at t_i
    new_edges = list(graph.edges)
    for i in range(3):
        new_edges.append((tt[i], prime_names[(i + 1) % 3], s[i]))
        new_edges.append((tt[i], prime_names[(i + 2) % 3], -s[i]))
    for i in range(3):
        new_edges.append((prime_names[i], prime_names[(i + 1) % 3], -1))
    new = SignedGraph(graph.vertices + tuple(prime_names), tuple(new_edges))
    marked = g.marked_triangles + (canonical_set(new, prime_names),)  # type: ignore[operator]
    return GadgetGraph(new, g.terminals, marked)


_W_HAT_EDGES: tuple[tuple[str, str, int], ...] = (
    ("w", "x1", -1), ("w", "x2", -1), ("w", "x3", -1), ("w", "x4", -1), ("w", "x5", -1),
    ("x1", "x2", -1), ("x2", "x3", -1), ("x3", "x4", -1), ("x4", "x5", -1), ("x1", "x5", -1),
    ("z", "x2", -1), ("z", "x3", -1),
    ("t", "x4", -1), ("t", "x5", -1),
    ("u", "x1", -1), ("u", "x2", 1), ("u", "x5", -1), ("u", "z", -1), ("u", "t", -1),
    ("v", "x3", -1), ("v", "x4", 1), ("v", "z", -1), ("v", "t", -1),
    ("u", "v", -1),
)


def w_hat() -> GadgetGraph:
    """The 10-vertex core gadget with terminals u, v.

    A hub w inside a 5-cycle x1..x5, two extra vertices z, t, and the two
    terminals.  Only u-x2 and v-x4 are positive; the faces u-x1-x2 and
    v-x3-x4 are positive triangles, and the five marked triangles are
    negative.
    """
    g = SignedGraph(("w", "x1", "x2", "x3", "x4", "x5", "z", "t", "u", "v"), _W_HAT_EDGES)
    marked = (
        ("w", "x1", "x2"),
        ("w", "x1", "x5"),
        ("w", "x3", "x4"),
        ("x2", "x3", "z"),
        ("x4", "x5", "t"),
    )
    return GadgetGraph(g, {"u": "u", "v": "v"}, marked)


def w_prime() -> GadgetGraph:
    """w_hat with both positive faces completed; 16 vertices, 7 marked triangles."""
    g = w_hat()
    # canonical order of (u, x1, x2) is (x1, x2, u); primes in that order
    # are a2 = prime(x1), a3 = prime(x2), a1 = prime(u)
    g = complete_positive_face(g, ("u", "x1", "x2"), ("a2", "a3", "a1"))
    g = complete_positive_face(g, ("v", "x3", "x4"), ("b2", "b3", "b1"))
    return g


def w_double_prime() -> GadgetGraph:
    """w_prime with an apex completing each of the 7 marked triangles; 23 vertices."""
    g = w_prime()
    for i, t in enumerate(g.marked_triangles, start=1):
        g = complete_negative_face(g, t, f"c{i}")
    return g


def substitute_edge(
    g: GadgetGraph,
    e: tuple[str, str],
    gadget: GadgetGraph,
    suffix: str | int = "s",
) -> GadgetGraph:
    """Replace edge ``e = (x, y)`` by a fresh copy of ``gadget``.

    The copy's u terminal is identified with x and its v terminal with y;
    the copy's u-v edge is merged with e.  When the gadget's u-v sign
    differs from the host edge sign, the copy is switched at its v
    terminal first, which preserves all cycle signs inside the copy.
    Non-terminal copy vertices are renamed with ``#<suffix>``; the copy's
    marked triangles are appended.
    """
    new, _ = _substitute_edge_mapped(g, e, gadget, suffix)
    return new


def _substitute_edge_mapped(
    g: GadgetGraph,
    e: tuple[str, str],
    gadget: GadgetGraph,
    suffix: str | int,
) -> tuple[GadgetGraph, dict[str, str]]:
    x, y = e
    host = g.graph
    if not host.has_edge(x, y):
        raise GraphError(f"({x!r}, {y!r}) is not an edge of the host")
    gu = gadget.terminal("u")
    gv = gadget.terminal("v")
    if not gadget.graph.has_edge(gu, gv):
        raise GraphError("gadget terminals u and v are not adjacent")

    copy = gadget
    if gadget.graph.sign(gu, gv) != host.sign(x, y):
        from .sgraph import switch

        copy = GadgetGraph(switch(gadget.graph, (gv,)), gadget.terminals, gadget.marked_triangles)

    mapping = {}
    for v in copy.graph.vertices:
        if v == gu:
            mapping[v] = x
        elif v == gv:
            mapping[v] = y
        else:
            mapping[v] = f"{v}#{suffix}"
            if host.has_vertex(mapping[v]):
                raise GraphError(f"fresh name {mapping[v]!r} collides with host")

    vertices = list(host.vertices) + [
        mapping[v] for v in copy.graph.vertices if v not in (gu, gv)
    ]
    edges = list(host.edges)
    for a, b, s in copy.graph.edges:
        if {a, b} == {gu, gv}:
            continue  # merged with the host edge
        edges.append((mapping[a], mapping[b], s))
    new_graph = SignedGraph(tuple(vertices), tuple(edges))
    marked = list(g.marked_triangles)
    for t in copy.marked_triangles:
        marked.append(canonical_set(new_graph, tuple(mapping[v] for v in t)))
    return GadgetGraph(new_graph, g.terminals, tuple(marked)), mapping


def glue_triangle(
    host: GadgetGraph,
    t_host: Iterable[str],
    guest: GadgetGraph,
    t_guest: Iterable[str],
    suffix: str | int = "g",
    correspondence: Mapping[str, str] | None = None,
) -> GadgetGraph:
    """Identify a negative triangle of ``guest`` with one of ``host``.

    ``correspondence`` maps guest triangle vertices to host triangle
    vertices (default: canonical order to canonical order).  The guest copy
    is switched at a subset of the identified vertices so the three shared
    edge signs agree with the host; both triangles being negative, such a
    subset always exists.  Shared edges are merged, other guest vertices
    are renamed with ``#<suffix>``.
    """
    th = _triple(host.graph, t_host)
    tg = _triple(guest.graph, t_guest)
    if triangle_sign(host.graph, th) != -1:
        raise GraphError(f"host triangle {th} is not negative")
    if triangle_sign(guest.graph, tg) != -1:
        raise GraphError(f"guest triangle {tg} is not negative")
    if correspondence is None:
        correspondence = dict(zip(tg, th))
    if sorted(correspondence) != sorted(tg) or sorted(correspondence.values()) != sorted(th):
        raise GraphError("correspondence must biject the two triangles")

    from .sgraph import switch

    pairs = [(tg[0], tg[1]), (tg[0], tg[2]), (tg[1], tg[2])]
    switched = None
    for bits in range(8):
        subset = tuple(tg[i] for i in range(3) if bits >> i & 1)
        ok = True
        for a, b in pairs:
            flip = (a in subset) != (b in subset)
            sign = -guest.graph.sign(a, b) if flip else guest.graph.sign(a, b)
            if sign != host.graph.sign(correspondence[a], correspondence[b]):
                ok = False
                break
        if ok:
            switched = switch(guest.graph, subset)
            break
    if switched is None:  # unreachable for two negative triangles
        raise GraphError("cannot match shared edge signs by switching")

    mapping = {}
    for v in switched.vertices:
        if v in correspondence:
            mapping[v] = correspondence[v]
        else:
            mapping[v] = f"{v}#{suffix}"
            if host.graph.has_vertex(mapping[v]):
                raise GraphError(f"fresh name {mapping[v]!r} collides with host")

    vertices = list(host.graph.vertices) + [
        mapping[v] for v in switched.vertices if v not in correspondence
    ]
    shared = set(tg)
    edges = list(host.graph.edges)
    for a, b, s in switched.edges:
        if a in shared and b in shared:
            continue  # merged with host triangle edges
        edges.append((mapping[a], mapping[b], s))
    new_graph = SignedGraph(tuple(vertices), tuple(edges))
    marked = list(host.marked_triangles)
    for t in guest.marked_triangles:
        mt = canonical_set(new_graph, tuple(mapping[v] for v in t))
        if mt not in marked:
            marked.append(mt)
    return GadgetGraph(new_graph, host.terminals, tuple(marked))


def u_hat() -> GadgetGraph:
    """K4 with every edge replaced by a w_prime copy; 88 vertices, 42 marked triangles."""
    base = k4_minus()
    g = GadgetGraph(base.graph, {}, ())
    wp = w_prime()
    for i, (a, b, _) in enumerate(base.graph.edges, start=1):
        g = substitute_edge(g, (a, b), wp, suffix=i)
    return g


def g_hat_k3() -> GadgetGraph:
    """Triangle with every edge replaced by a w_double_prime copy; 66 vertices."""
    base = k3_minus()
    g = GadgetGraph(base.graph, {}, ())
    wpp = w_double_prime()
    for i, (a, b, _) in enumerate(base.graph.edges, start=1):
        g = substitute_edge(g, (a, b), wpp, suffix=i)
    return g


def g_sequence(i: int, depth_guard: int = 2) -> GadgetGraph:
    """The iterated gadget family: level 0 is the all-negative K4, and each
    later level is u_hat with a fresh copy of the previous level glued onto
    every one of its 42 marked triangles.

    Sizes grow geometrically, hence the depth guard.  The guest's outer
    triangle is the lexicographically least triangle of its base K4, which
    is always (u1, u2, u3).
    """
    if i < 0:
        raise GraphError("level must be nonnegative")
    if i > depth_guard:
        raise TraceError(i, f"depth guard exceeded ({i} > {depth_guard})")
    g = k4_minus()
    for _ in range(i):
        prev = g
        g = u_hat()
        for k, t in enumerate(list(g.marked_triangles)[:42], start=1):
            g = glue_triangle(g, t, prev, ("u1", "u2", "u3"), suffix=f"g{k}")
    return g


def w1_underlying(alt_orientation: bool = False) -> GadgetGraph:
    """34-vertex unsigned view (all signs -1) used for arboricity runs.

    Start from the underlying graph of w_hat and replace the three edges
    u-z, u-x1, u-t, each by a distinct all-negative copy of the same graph,
    with the copy's u identified with the host u (or with the other
    endpoint when ``alt_orientation`` is set).
    """
    core = w_hat().graph
    unsigned = SignedGraph(core.vertices, tuple((a, b, -1) for a, b, _ in core.edges))
    gadget = GadgetGraph(unsigned, {"u": "u", "v": "v"}, ())
    g = GadgetGraph(unsigned, {"u": "u", "v": "v"}, ())
    for i, other in enumerate(("z", "x1", "t"), start=1):
        e = (other, "u") if alt_orientation else ("u", other)
        g = substitute_edge(g, e, gadget, suffix=i)
    return g


@dataclass(frozen=True)
class Op1:
    """Insert an apex inside a negative facial triangle."""

    face: tuple[str, str, str]


@dataclass(frozen=True)
class Op2:
    """Replace an edge by a fresh w_prime copy (u identified with the first
    endpoint, v with the second)."""

    edge: tuple[str, str]


@dataclass(frozen=True)
class BuildTrace:
    """Recipe for building a graph from an all-negative base triangle or K4."""

    base: str  # "K3_MINUS" or "K4_MINUS"
    steps: tuple[Op1 | Op2, ...] = ()

    def __post_init__(self) -> None:
        if self.base not in ("K3_MINUS", "K4_MINUS"):
            raise GraphError(f"unknown trace base {self.base!r}")

    @classmethod
    def from_json(cls, text: str) -> "BuildTrace":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed JSON: {exc}") from exc
        steps: list[Op1 | Op2] = []
        for k, entry in enumerate(obj.get("steps", []), start=1):
            op = entry.get("op")
            if op == "inner_k4":
                face = entry.get("face")
                if not isinstance(face, list) or len(face) != 3:
                    raise TraceError(k, "inner_k4 needs a 3-vertex face")
                steps.append(Op1(tuple(face)))
            elif op == "substitute_w_prime":
                edge = entry.get("edge")
                if not isinstance(edge, list) or len(edge) != 2:
                    raise TraceError(k, "substitute_w_prime needs a 2-vertex edge")
                steps.append(Op2(tuple(edge)))
            else:
                raise TraceError(k, f"unknown op {op!r}")
        return cls(obj.get("base", ""), tuple(steps))

    def to_json(self) -> str:
        steps = []
        for s in self.steps:
            if isinstance(s, Op1):
                steps.append({"op": "inner_k4", "face": list(s.face)})
            else:
                steps.append({"op": "substitute_w_prime", "edge": list(s.edge)})
        return json.dumps({"base": self.base, "steps": steps}, indent=2)


def apply_trace_step(
    g: GadgetGraph, step: Op1 | Op2, idx: int
) -> tuple[GadgetGraph, dict[str, str] | str]:
    """Apply one trace step with deterministic naming by step index.

    Returns the new gadget plus the apex name (Op1) or the copy's
    template-to-fresh name mapping (Op2).
    """
    if isinstance(step, Op1):
        try:
            new = complete_negative_face(g, step.face, apex=f"k{idx}")
        except GraphError as exc:
            raise TraceError(idx, str(exc)) from exc
        return new, f"k{idx}"
    try:
        new, mapping = _substitute_edge_mapped(g, step.edge, w_prime(), suffix=idx)
    except GraphError as exc:
        raise TraceError(idx, str(exc)) from exc
    return new, mapping


def build_from_trace(trace: BuildTrace) -> GadgetGraph:
    """Replay a build trace; step preconditions are reported by index."""
    g = k3_minus() if trace.base == "K3_MINUS" else k4_minus()
    for idx, step in enumerate(trace.steps, start=1):
        g, _ = apply_trace_step(g, step, idx)
    return g
