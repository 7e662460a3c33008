"""Inductive synthesis of balanced (83, 41)-colorings along a build trace.

Every graph built from the all-negative triangle by the two trace
operations admits a balanced (83, 41)-coloring in which the endpoints of
every edge share either 13 or 14 colors.  This module constructs one by
replaying the trace while carrying the coloring as 83 explicit color
slots (vertex sets):

* Base: the all-negative triangle colored with pairwise overlaps
  (14, 14, 14) and 13 exclusive colors per vertex.

* Apex insertion: the new vertex may join exactly the classes containing
  at most one vertex of its face (two face vertices plus the apex would
  close a negative triangle).  A tiny feasibility search picks the face
  overlaps a_i in {13, 14} and the leftover count b = 41 - sum(a_i),
  subject to pool capacities; a solution always exists because the face
  overlaps sum to at least 40.

* Edge substitution: the host coloring restricted to {x, y} and a
  reference coloring of the 10-vertex gadget restricted to {u, v} induce
  the same four membership-pattern group sizes, so the two colorings can
  be matched slot by slot (template for overlap 13 or 14, matching the
  current overlap of the edge).  Matched slots absorb the corresponding
  gadget class; balance survives because the identified edge pins the
  sign of every path between its endpoints on both sides.  The two
  positive faces of the copy are then completed with a scheme from the
  mini-extension fixture, selected by the induced triangle profile.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .certify import Certificate, Mode
from .gadgets import (
    BuildTrace,
    GadgetGraph,
    Op1,
    apply_trace_step,
    k3_minus,
    k4_minus,
)
from .tables import (
    k3_base_colorings,
    mini_extension_schemes,
    w_coloring_83_41_uv13,
    w_coloring_83_41_uv14,
)

P, Q = 83, 41


class ComposeError(RuntimeError):
    """Induction invariant broken; carries diagnostics for the failing step."""


@dataclass
class _State:
    gadget: GadgetGraph
    slots: list[set[str]]  # slots[i] = vertices holding color i

    def overlap(self, x: str, y: str) -> int:
        return sum(1 for s in self.slots if x in s and y in s)

    def coverage(self, v: str) -> int:
        return sum(1 for s in self.slots if v in s)


def _expand(cert: Certificate) -> list[set[str]]:
    """Certificate as explicit unit-weight slots, padded to the palette."""
    slots: list[set[str]] = []
    for s, rep in cert.classes:
        slots.extend(set(s) for _ in range(rep))
    slots.extend(set() for _ in range(cert.p - len(slots)))
    return slots


def _base_state(base: str) -> _State:
    state = _State(k3_minus(), _expand(k3_base_colorings()["14-14-14"]))
    if base == "K4_MINUS":
        state.gadget = k4_minus()
        _extend_apex(state, ("u1", "u2", "u3"), "u4", step=0)
    return state


def _extend_apex(state: _State, face: Sequence[str], apex: str, step: int) -> None:
    """Assign 41 colors to a new apex adjacent to the three face vertices."""
    g = state.gadget.graph
    f = sorted(face, key=g.index.__getitem__)
    pools: dict[frozenset[str], list[int]] = {}
    for i, slot in enumerate(state.slots):
        pools.setdefault(frozenset(slot & set(f)), []).append(i)
    only = [pools.get(frozenset((v,)), []) for v in f]
    none_pool = pools.get(frozenset(), [])
    if pools.get(frozenset(f)):
        raise ComposeError(
            f"step {step}: face {f} carried by a full class; it cannot be negative"
        )

    choice = None
    for a1, a2, a3 in product((13, 14), repeat=3):
        b = Q - (a1 + a2 + a3)
        if b < 0 or b > len(none_pool):
            continue
        if a1 <= len(only[0]) and a2 <= len(only[1]) and a3 <= len(only[2]):
            choice = (a1, a2, a3, b)
            break
    if choice is None:
        sizes = ([len(x) for x in only], len(none_pool))
        raise ComposeError(f"step {step}: no feasible apex profile, pools {sizes}")
    a1, a2, a3, b = choice
    for count, pool in ((a1, only[0]), (a2, only[1]), (a3, only[2]), (b, none_pool)):
        for i in pool[:count]:
            state.slots[i].add(apex)


_PATTERNS = ("both", "first", "second", "neither")


def _pattern(slot: set[str], x: str, y: str) -> str:
    if x in slot:
        return "both" if y in slot else "first"
    return "second" if y in slot else "neither"


def _extend_substitution(
    state: _State, edge: tuple[str, str], mapping: dict[str, str], step: int
) -> None:
    """Graft a reference gadget coloring onto the fresh copy along ``edge``."""
    x, y = edge
    a = state.overlap(x, y)
    if a == 13:
        template = w_coloring_83_41_uv13()
    elif a == 14:
        template = w_coloring_83_41_uv14()
    else:
        raise ComposeError(f"step {step}: edge {edge} has overlap {a}, not 13 or 14")

    tslots = _expand(template)
    host_groups = {p: [] for p in _PATTERNS}
    for i, slot in enumerate(state.slots):
        host_groups[_pattern(slot, x, y)].append(i)
    template_groups = {p: [] for p in _PATTERNS}
    for i, slot in enumerate(tslots):
        template_groups[_pattern(slot, "u", "v")].append(i)
    for p in _PATTERNS:
        if len(host_groups[p]) != len(template_groups[p]):
            raise ComposeError(
                f"step {step}: group {p} mismatch "
                f"{len(host_groups[p])} vs {len(template_groups[p])}"
            )
    for p in _PATTERNS:
        for hi, ti in zip(host_groups[p], template_groups[p]):
            state.slots[hi].update(
                mapping[w] for w in tslots[ti] if w not in ("u", "v")
            )

    for outer, minis in (
        (("u", "x1", "x2"), ("a1", "a2", "a3")),
        (("v", "x3", "x4"), ("b1", "b2", "b3")),
    ):
        _extend_mini(
            state,
            tuple(mapping[o] for o in outer),
            tuple(mapping[m] for m in minis),
            step,
        )


def _extend_mini(
    state: _State, outer: tuple[str, ...], minis: tuple[str, ...], step: int
) -> None:
    """Complete the coloring over one positive-face mini gadget."""
    g = state.gadget.graph
    o = sorted(outer, key=g.index.__getitem__)
    # prime of an outer vertex: the mini vertex not adjacent to it
    prime = {}
    for v in o:
        non_adj = [m for m in minis if not g.has_edge(v, m)]
        if len(non_adj) != 1:
            raise ComposeError(f"step {step}: bad mini adjacency at {v}")
        prime[v] = non_adj[0]

    triple_group: list[int] = []
    pair_groups: dict[frozenset[str], list[int]] = {
        frozenset((o[i], o[(i + 1) % 3])): [] for i in range(3)
    }
    single_groups: dict[str, list[int]] = {v: [] for v in o}
    for i, slot in enumerate(state.slots):
        inside = slot & set(o)
        if len(inside) == 3:
            triple_group.append(i)
        elif len(inside) == 2:
            pair_groups[frozenset(inside)].append(i)
        elif len(inside) == 1:
            single_groups[next(iter(inside))].append(i)

    pair_sizes = {len(v) for v in pair_groups.values()}
    single_sizes = {len(v) for v in single_groups.values()}
    scheme = None
    for cand in mini_extension_schemes():
        prof = cand["profile"]
        if (
            len(triple_group) == prof["triple"]
            and pair_sizes == {prof["pair"]}
            and single_sizes == {prof["single"]}
        ):
            scheme = cand
            break
    if scheme is None:
        raise ComposeError(
            f"step {step}: unknown triangle profile "
            f"(triple={len(triple_group)}, pairs={sorted(pair_sizes)}, "
            f"singles={sorted(single_sizes)})"
        )

    taken = {v: 0 for v in o}  # consumption pointer per single group
    pair_taken = {k: 0 for k in pair_groups}
    for i in range(3):
        env = {"i": o[i], "i+1": o[(i + 1) % 3], "i+2": o[(i + 2) % 3]}
        for fam in scheme["families"]:
            out_pat = [env[tok] for tok in fam["outer"]]
            primes = [prime[env[tok]] for tok in fam["primes"]]
            count = fam["count"]
            if len(out_pat) == 2:
                key = frozenset(out_pat)
                pool = pair_groups[key]
                start = pair_taken[key]
                if start + count > len(pool):
                    raise ComposeError(f"step {step}: pair pool exhausted at {out_pat}")
                chosen = pool[start:start + count]
                pair_taken[key] = start + count
            else:
                v = out_pat[0]
                pool = single_groups[v]
                start = taken[v]
                if start + count > len(pool):
                    raise ComposeError(f"step {step}: single pool exhausted at {v}")
                chosen = pool[start:start + count]
                taken[v] = start + count
            for slot_id in chosen:
                state.slots[slot_id].update(primes)


def compose_8341(trace: BuildTrace) -> Certificate:
    """Balanced (83, 41)-coloring of the traced graph with every edge
    overlap in {13, 14}; verify() accepts the result by construction, and
    the caller can re-check it independently."""
    state = _base_state(trace.base)
    for idx, step in enumerate(trace.steps, start=1):
        new_gadget, info = apply_trace_step(state.gadget, step, idx)
        if isinstance(step, Op1):
            state.gadget = new_gadget
            _extend_apex(state, step.face, info, idx)  # type: ignore[arg-type]
        else:
            state.gadget = new_gadget
            _extend_substitution(state, step.edge, info, idx)  # type: ignore[arg-type]
    rows = [(tuple(sorted(s)), 1) for s in state.slots if s]
    return Certificate.build(P, Q, Mode.BALANCED, rows)
