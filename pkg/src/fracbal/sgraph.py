"""Signed graphs: data model, serialization, switching, and balance testing.

A signed graph is a simple undirected graph with a sign (+1 or -1) on every
edge.  A vertex set is *balanced* when the subgraph it induces contains no
cycle whose edge-sign product is -1.  Balance is decided with a
parity-annotated union-find over the induced edges; a separate BFS pass
extracts an explicit negative-cycle witness when one exists.

Vertex declaration order is the canonical order used for all deterministic
output (sorted sets, sorted edge lists, witness extraction).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input, or an operation on vertices not in the graph."""


@dataclass(frozen=True)
class CycleWitness:
    """A cyclic vertex sequence whose consecutive pairs are edges.

    ``sign`` is the product of the edge signs along the cycle.
    """

    vertices: tuple[str, ...]
    sign: int


@dataclass(frozen=True)
class SignedGraph:
    """Immutable simple signed graph.

    ``vertices`` fixes the canonical order.  Each edge is stored as
    ``(a, b, sign)`` with ``a`` before ``b`` in canonical order, and the
    edge list is sorted; two graphs are equal iff they have the same
    vertex order and the same signed edges.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex name")
        index = {v: i for i, v in enumerate(self.vertices)}
        seen: set[tuple[str, str]] = set()
        normalized = []
        for a, b, sign in self.edges:
            if a not in index or b not in index:
                raise GraphError(f"unknown vertex in edge ({a!r}, {b!r})")
            if a == b:
                raise GraphError(f"loop at {a!r} is not allowed")
            if sign not in (1, -1):
                raise GraphError(f"edge sign must be +1 or -1, got {sign!r}")
            if index[a] > index[b]:
                a, b = b, a
            if (a, b) in seen:
                raise GraphError(f"duplicate edge ({a!r}, {b!r})")
            seen.add((a, b))
            normalized.append((a, b, sign))
        normalized.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "edges", tuple(normalized))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adj(self) -> dict[str, dict[str, int]]:
        nbrs: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        for a, b, sign in self.edges:
            nbrs[a][b] = sign
            nbrs[b][a] = sign
        return nbrs

    def has_vertex(self, v: str) -> bool:
        return v in self.index

    def has_edge(self, a: str, b: str) -> bool:
        return b in self.adj.get(a, {})

    def sign(self, a: str, b: str) -> int:
        try:
            return self.adj[a][b]
        except KeyError:
            raise GraphError(f"no edge ({a!r}, {b!r})") from None

    def neighbors(self, v: str) -> dict[str, int]:
        if v not in self.adj:
            raise GraphError(f"unknown vertex {v!r}")
        return self.adj[v]

    def induced_edges(self, members: Iterable[str]) -> Iterator[tuple[str, str, int]]:
        inside = set(members)
        for a, b, sign in self.edges:
            if a in inside and b in inside:
                yield a, b, sign


def canonical_set(g: SignedGraph, members: Iterable[str]) -> tuple[str, ...]:
    """Sort ``members`` by canonical vertex order, rejecting strangers and dups."""
    out = []
    seen = set()
    for v in members:
        if v not in g.index:
            raise GraphError(f"vertex {v!r} not in graph")
        if v in seen:
            raise GraphError(f"duplicate member {v!r}")
        seen.add(v)
        out.append(v)
    out.sort(key=g.index.__getitem__)
    return tuple(out)


class ParityDSU:
    """Union-find with sign parity and O(1) rollback.

    No path compression so that ``rollback`` can undo unions in reverse
    order; union by rank keeps finds near-logarithmic, which is plenty for
    the graph sizes handled here.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.parity = [0] * n  # parity of the edge to the parent
        self.rank = [0] * n
        self._trail: list[tuple[int, bool]] = []

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def union(self, x: int, y: int, negative: bool) -> bool:
        """Join x and y with the given edge parity; False on a parity conflict."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        want = px ^ py ^ (1 if negative else 0)
        if rx == ry:
            return want == 0
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        bumped = self.rank[rx] == self.rank[ry]
        if bumped:
            self.rank[rx] += 1
        self.parent[ry] = rx
        self.parity[ry] = want
        self._trail.append((ry, bumped))
        return True

    def mark(self) -> int:
        return len(self._trail)

    def rollback(self, mark: int) -> None:
        while len(self._trail) > mark:
            child, bumped = self._trail.pop()
            root = self.parent[child]
            self.parent[child] = child
            self.parity[child] = 0
            if bumped:
                self.rank[root] -= 1


def is_balanced(g: SignedGraph, members: Iterable[str]) -> bool:
    """True iff ``members`` induces no cycle with edge-sign product -1."""
    s = canonical_set(g, members)
    pos = {v: i for i, v in enumerate(s)}
    dsu = ParityDSU(len(s))
    for a, b, sign in g.induced_edges(s):
        if not dsu.union(pos[a], pos[b], sign < 0):
            return False
    return True


def is_acyclic(g: SignedGraph, members: Iterable[str]) -> bool:
    """True iff ``members`` induces a forest (signs ignored)."""
    s = canonical_set(g, members)
    pos = {v: i for i, v in enumerate(s)}
    dsu = ParityDSU(len(s))
    for a, b, _ in g.induced_edges(s):
        ra, _ = dsu.find(pos[a])
        rb, _ = dsu.find(pos[b])
        if ra == rb:
            return False
        dsu.union(pos[a], pos[b], False)
    return True


def _bfs_forest(g: SignedGraph, s: tuple[str, ...]):
    """BFS spanning forest of the induced subgraph with parity labels.

    Returns (parent, parity, depth) with deterministic canonical-order
    traversal.
    """
    inside = set(s)
    parent: dict[str, str | None] = {}
    parity: dict[str, int] = {}
    depth: dict[str, int] = {}
    for root in s:
        if root in parent:
            continue
        parent[root] = None
        parity[root] = 0
        depth[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in sorted(g.adj[v], key=g.index.__getitem__):
                if w in inside and w not in parent:
                    parent[w] = v
                    parity[w] = parity[v] ^ (1 if g.adj[v][w] < 0 else 0)
                    depth[w] = depth[v] + 1
                    queue.append(w)
    return parent, parity, depth


def _fundamental_cycle(parent, depth, a: str, b: str) -> tuple[str, ...]:
    """Vertex cycle through tree paths from a and b up to their meeting point."""
    up_a = [a]
    up_b = [b]
    x, y = a, b
    while depth[x] > depth[y]:
        x = parent[x]
        up_a.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        up_b.append(y)
    while x != y:
        x = parent[x]
        y = parent[y]
        up_a.append(x)
        up_b.append(y)
    # up_a ends at the meeting vertex; strip it from up_b and reverse
    return tuple(up_a + up_b[-2::-1])


def negative_cycle_witness(g: SignedGraph, members: Iterable[str]) -> CycleWitness | None:
    """Explicit negative cycle inside ``members``, or None when balanced."""
    s = canonical_set(g, members)
    parent, parity, depth = _bfs_forest(g, s)
    for a, b, sign in g.induced_edges(s):
        if parent.get(a) == b or parent.get(b) == a:
            continue
        if parity[a] ^ parity[b] ^ (1 if sign < 0 else 0):
            return CycleWitness(_fundamental_cycle(parent, depth, a, b), -1)
    return None


def any_cycle(g: SignedGraph, members: Iterable[str]) -> CycleWitness | None:
    """Any induced cycle (with its sign), or None when the set is a forest."""
    s = canonical_set(g, members)
    parent, parity, depth = _bfs_forest(g, s)
    for a, b, sign in g.induced_edges(s):
        if parent.get(a) == b or parent.get(b) == a:
            continue
        cyc = _fundamental_cycle(parent, depth, a, b)
        csign = -1 if parity[a] ^ parity[b] ^ (1 if sign < 0 else 0) else 1
        return CycleWitness(cyc, csign)
    return None


def switch(g: SignedGraph, members: Iterable[str]) -> SignedGraph:
    """Negate the sign of every edge with exactly one endpoint in ``members``.

    Involutive, and preserves the sign of every cycle.
    """
    inside = set(canonical_set(g, members))
    edges = tuple(
        (a, b, -sign if (a in inside) != (b in inside) else sign)
        for a, b, sign in g.edges
    )
    return SignedGraph(g.vertices, edges)


def all_triangles(g: SignedGraph) -> list[tuple[tuple[str, str, str], int]]:
    """Every 3-clique with the product of its edge signs, in canonical order."""
    out = []
    idx = g.index
    order = sorted(g.vertices, key=idx.__getitem__)
    for a in order:
        for b in sorted(g.adj[a], key=idx.__getitem__):
            if idx[b] <= idx[a]:
                continue
            for c in sorted(g.adj[b], key=idx.__getitem__):
                if idx[c] <= idx[b] or c not in g.adj[a]:
                    continue
                sign = g.adj[a][b] * g.adj[b][c] * g.adj[a][c]
                out.append(((a, b, c), sign))
    return out


def triangle_sign(g: SignedGraph, t: Iterable[str]) -> int:
    """Edge-sign product of a 3-clique; GraphError when not a triangle."""
    a, b, c = canonical_set(g, t)
    return g.sign(a, b) * g.sign(b, c) * g.sign(a, c)


def is_k4_minus_equivalent(g: SignedGraph) -> bool:
    """True iff g is K4 with all four triangles negative.

    Cycle signs are switching invariants, and on K4 the four triangle signs
    determine the switching class, so this decides switching equivalence
    with the all-negative K4.
    """
    if len(g.vertices) != 4 or len(g.edges) != 6:
        return False
    return all(sign == -1 for _, sign in all_triangles(g))


def parse_graph(text: str) -> SignedGraph:
    """Parse the graph JSON schema into a SignedGraph.

    Schema: ``{"vertices": ["u", ...], "edges": [{"a": .., "b": .., "sign": -1}, ...]}``
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphError("graph document must be a JSON object")
    vertices = obj.get("vertices")
    raw_edges = obj.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be a list of strings")
    if not isinstance(raw_edges, list):
        raise GraphError("'edges' must be a list")
    edges = []
    for entry in raw_edges:
        if not isinstance(entry, dict) or not {"a", "b", "sign"} <= entry.keys():
            raise GraphError(f"edge entry must have keys a, b, sign: {entry!r}")
        edges.append((entry["a"], entry["b"], entry["sign"]))
    return SignedGraph(tuple(vertices), tuple(edges))


def serialize_graph(g: SignedGraph) -> str:
    """Canonical JSON for g; round-trips through parse_graph."""
    obj = {
        "vertices": list(g.vertices),
        "edges": [{"a": a, "b": b, "sign": sign} for a, b, sign in g.edges],
    }
    return json.dumps(obj, indent=2)
