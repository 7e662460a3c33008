"""Certificates for (p, q)-colorings and their verification audits.

A certificate is a weighted list of vertex sets: each class is used as a
color class ``rep`` times, drawing from a palette of p colors, and every
vertex must be covered at least q times.  Classes identify colors only
through multiplicity; duplicate rows for the same set are merged on load.

The verifier is deliberately primitive: it uses only balance / forest
checks and integer counting, so it stays independent of whatever produced
the certificate (the LP solver or the inductive composer).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .sgraph import GraphError, SignedGraph, any_cycle, negative_cycle_witness


class CertificateError(ValueError):
    """Structurally invalid certificate."""


class Mode(Enum):
    BALANCED = "balanced"
    FOREST = "forest"


@dataclass(frozen=True)
class Certificate:
    """A (p, q)-coloring given as color classes with repetition counts.

    Invariants: p, q >= 1; classes are nonempty, lexicographically sorted,
    pairwise distinct, with positive repetitions summing to at most p.
    """

    p: int
    q: int
    mode: Mode
    classes: tuple[tuple[tuple[str, ...], int], ...]

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise CertificateError("p and q must be positive")
        total = 0
        prev: tuple[str, ...] | None = None
        for s, rep in self.classes:
            if not s:
                raise CertificateError("empty color class")
            if list(s) != sorted(set(s)):
                raise CertificateError(f"class {s} is not a sorted set")
            if prev is not None and s <= prev:
                raise CertificateError("classes not sorted or not merged")
            if rep < 1:
                raise CertificateError(f"class {s} has repetition {rep}")
            prev = s
            total += rep
        if total > self.p:
            raise CertificateError(f"total repetition {total} exceeds palette {self.p}")

    @classmethod
    def build(
        cls,
        p: int,
        q: int,
        mode: Mode,
        classes: Iterable[tuple[Iterable[str], int]],
    ) -> "Certificate":
        """Canonicalize raw rows: sort each set, merge duplicate sets."""
        merged: dict[tuple[str, ...], int] = {}
        for raw, rep in classes:
            row = tuple(raw)
            key = tuple(sorted(set(row)))
            if len(key) != len(row):
                raise CertificateError(f"class {row} repeats a vertex")
            merged[key] = merged.get(key, 0) + rep
        rows = tuple(sorted(merged.items()))
        return cls(p, q, mode, rows)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"malformed JSON: {exc}") from exc
        try:
            mode = Mode(obj["mode"])
            rows = [(entry["set"], entry["rep"]) for entry in obj["classes"]]
            return cls.build(obj["p"], obj["q"], mode, rows)
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"bad certificate document: {exc}") from exc

    def to_json(self) -> str:
        obj = {
            "p": self.p,
            "q": self.q,
            "mode": self.mode.value,
            "classes": [{"set": list(s), "rep": rep} for s, rep in self.classes],
        }
        return json.dumps(obj, indent=2)

    @property
    def total_rep(self) -> int:
        return sum(rep for _, rep in self.classes)

    def coverage(self, v: str) -> int:
        return sum(rep for s, rep in self.classes if v in s)


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: tuple[str, ...]
    witness: tuple[str, ...] | None = None
    message: str = ""


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    per_vertex_coverage: tuple[tuple[str, int], ...]
    violations: tuple[Violation, ...]

    @property
    def coverage_map(self) -> dict[str, int]:
        return dict(self.per_vertex_coverage)


def verify(g: SignedGraph, c: Certificate) -> VerifyReport:
    """Check a certificate against a host graph.

    Findings rather than exceptions: every class must induce a balanced set
    (BALANCED mode) or a forest (FOREST mode), total repetitions must fit
    the palette, and every vertex must be covered at least q times.
    """
    violations: list[Violation] = []
    for s, rep in c.classes:
        strangers = [v for v in s if not g.has_vertex(v)]
        if strangers:
            violations.append(
                Violation("unknown-vertex", s, None, f"not in graph: {strangers}")
            )
            continue
        if c.mode is Mode.BALANCED:
            witness = negative_cycle_witness(g, s)
            if witness is not None:
                violations.append(
                    Violation("unbalanced-class", s, witness.vertices,
                              "induces a negative cycle")
                )
        else:
            witness = any_cycle(g, s)
            if witness is not None:
                violations.append(
                    Violation("cyclic-class", s, witness.vertices, "induces a cycle")
                )
    if c.total_rep > c.p:
        violations.append(
            Violation("palette-overflow", (), None,
                      f"{c.total_rep} repetitions for {c.p} colors")
        )
    coverage = tuple((v, c.coverage(v)) for v in g.vertices)
    for v, cov in coverage:
        if cov < c.q:
            violations.append(
                Violation("undercovered-vertex", (v,), None, f"coverage {cov} < {c.q}")
            )
    return VerifyReport(not violations, coverage, tuple(violations))


def overlap(c: Certificate, x: str, y: str) -> int:
    """Number of common colors of two vertices."""
    if x == y:
        raise GraphError("overlap needs two distinct vertices")
    return sum(rep for s, rep in c.classes if x in s and y in s)


def triangle_common_count(c: Certificate, t: Sequence[str]) -> int:
    """Number of colors appearing on all three vertices of a triangle."""
    if len(set(t)) != 3:
        raise GraphError("expected 3 distinct vertices")
    need = set(t)
    return sum(rep for s, rep in c.classes if need <= set(s))


def triangle_missing_count(c: Certificate, t: Sequence[str]) -> int:
    """Number of colors that appear on none of the triangle's vertices.

    Unused palette colors (p minus the total repetition) miss every
    triangle and are counted in.
    """
    if len(set(t)) != 3:
        raise GraphError("expected 3 distinct vertices")
    need = set(t)
    disjoint = sum(rep for s, rep in c.classes if not need & set(s))
    return disjoint + (c.p - c.total_rep)


def triangle_property_audit(c: Certificate, t: Sequence[str], sign: int) -> bool:
    """Strict triangle property for (2k, k)-type colorings.

    Negative triangle: every color must touch it (zero missing colors).
    Positive triangle: no color may appear on all three vertices.
    """
    if sign == -1:
        return triangle_missing_count(c, t) == 0
    if sign == 1:
        return triangle_common_count(c, t) == 0
    raise GraphError("sign must be +1 or -1")


@dataclass(frozen=True)
class OverlapProfile:
    """Pairwise common-color counts and exclusive counts over terminals."""

    pairs: tuple[tuple[tuple[str, str], int], ...]
    singles: tuple[tuple[str, int], ...]

    @property
    def pair_map(self) -> dict[tuple[str, str], int]:
        return dict(self.pairs)

    @property
    def single_map(self) -> dict[str, int]:
        return dict(self.singles)


def profile(c: Certificate, terminals: Sequence[str]) -> OverlapProfile:
    """Overlap profile restricted to a terminal list: for each pair the
    common-color count, and for each terminal the count of colors it holds
    exclusively among the terminals."""
    terms = list(terminals)
    pairs = []
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            pairs.append(((terms[i], terms[j]), overlap(c, terms[i], terms[j])))
    singles = []
    for v in terms:
        others = [w for w in terms if w != v]
        count = sum(
            rep for s, rep in c.classes
            if v in s and not any(w in s for w in others)
        )
        singles.append((v, count))
    return OverlapProfile(tuple(pairs), tuple(singles))
