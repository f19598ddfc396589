"""k-uniform hypergraphs on dense integer vertex labels.

Conventions used everywhere in this package:
  - vertices are 0..n-1;
  - an edge is a strictly increasing k-tuple of vertices;
  - the edge list is sorted lexicographically, so equal hypergraphs have
    byte-identical serializations.

Text format (producible/consumable by every CLI command):
  line 1: ``k n``; each following non-comment line: k vertex indices.
  Lines starting with ``#`` and blank lines are ignored.  Edges need not be
  pre-sorted but duplicates are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import ParameterError, ParseError

# Frankl-Furedi 3-graph on six vertices, 0-based; every 4-set spans at
# most two of its ten edges.
S6_EDGES: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2), (0, 1, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5),
    (1, 2, 3), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 4, 5),
)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-uniform hypergraph in canonical form.

    The constructor insists on canonical input (each edge strictly
    increasing, edge list strictly increasing); use :func:`from_edges` to
    canonicalize arbitrary edge iterables.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ParameterError(f"uniformity must be >= 2, got k={self.k}")
        if self.n < 0:
            raise ParameterError(f"vertex count must be >= 0, got n={self.n}")
        prev = None
        for e in self.edges:
            if len(e) != self.k:
                raise ParameterError(f"edge {e} does not have {self.k} vertices")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ParameterError(f"edge {e} is not strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise ParameterError(f"edge {e} out of range [0, {self.n})")
            if prev is not None and e <= prev:
                raise ParameterError(f"edge list not strictly sorted at {e}")
            prev = e

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Each edge as a vertex bitmask, in edge-list order."""
        return tuple(_mask(e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return tuple(degs)


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edges(k: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Canonicalize an edge iterable into a Hypergraph.

    Duplicate edges (after sorting each edge) are rejected; builders are
    expected to produce each edge exactly once.
    """
    canon = sorted(tuple(sorted(e)) for e in edges)
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise ParameterError(f"duplicate edge {a}")
    return Hypergraph(k, n, tuple(canon))


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic descriptor of a named hypergraph family.

    kind is one of ``complete``, ``complete-minus``, ``daisy``, ``s6``,
    ``custom``.  Parameter bounds are checked on construction.
    """

    kind: str
    ell: int | None = None
    k: int | None = None
    t: int | None = None
    n: int | None = None
    edges: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind in ("complete", "complete-minus"):
            if self.k is None or self.ell is None or self.k < 2:
                raise ParameterError(f"{self.kind} requires l > k >= 2")
            if self.ell <= self.k:
                raise ParameterError(
                    f"{self.kind} requires l > k, got l={self.ell}, k={self.k}")
        elif self.kind == "daisy":
            if self.k is None or self.k < 2:
                raise ParameterError("daisy requires k >= 2")
            if self.t is None or not 1 <= self.t <= self.k + 1:
                raise ParameterError(
                    f"daisy requires 1 <= t <= k+1, got t={self.t}, k={self.k}")
        elif self.kind == "s6":
            pass
        elif self.kind == "custom":
            if self.k is None or self.n is None or self.edges is None:
                raise ParameterError("custom spec requires k, n and edges")
        else:
            raise ParameterError(f"unknown family kind {self.kind!r}")

    @classmethod
    def complete(cls, ell: int, k: int) -> "FamilySpec":
        return cls("complete", ell=ell, k=k)

    @classmethod
    def complete_minus(cls, ell: int, k: int) -> "FamilySpec":
        return cls("complete-minus", ell=ell, k=k)

    @classmethod
    def daisy(cls, t: int, k: int) -> "FamilySpec":
        return cls("daisy", t=t, k=k)

    @classmethod
    def s6(cls) -> "FamilySpec":
        return cls("s6")

    @classmethod
    def custom(cls, graph: Hypergraph) -> "FamilySpec":
        return cls("custom", k=graph.k, n=graph.n, edges=graph.edges)

    def describe(self) -> str:
        if self.kind == "complete":
            return f"K:{self.ell},{self.k}"
        if self.kind == "complete-minus":
            return f"K-:{self.ell},{self.k}"
        if self.kind == "daisy":
            return f"D:{self.t},{self.k}"
        if self.kind == "s6":
            return "S6"
        return f"custom(k={self.k}, n={self.n}, e={len(self.edges or ())})"


def build_named(spec: FamilySpec) -> Hypergraph:
    """Canonical hypergraph of a named family.

    Complete(l,k) is all k-subsets of [l]; CompleteMinus drops the
    lexicographically last edge.  Daisy(t,k) takes the t lexicographically
    smallest k-subsets of {0..k} (all choices are isomorphic, one is fixed
    for determinism).
    """
    if spec.kind == "complete":
        edges = list(combinations(range(spec.ell), spec.k))
        return Hypergraph(spec.k, spec.ell, tuple(edges))
    if spec.kind == "complete-minus":
        edges = list(combinations(range(spec.ell), spec.k))[:-1]
        return Hypergraph(spec.k, spec.ell, tuple(edges))
    if spec.kind == "daisy":
        edges = list(combinations(range(spec.k + 1), spec.k))[: spec.t]
        return Hypergraph(spec.k, spec.k + 1, tuple(edges))
    if spec.kind == "s6":
        return Hypergraph(3, 6, S6_EDGES)
    return from_edges(spec.k, spec.n, spec.edges)


def induced(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Subhypergraph on a vertex set, relabeled 0..|S|-1 preserving order."""
    s = sorted(set(vertices))
    for v in s:
        if v < 0 or v >= h.n:
            raise ParameterError(f"vertex {v} out of range [0, {h.n})")
    relabel = {v: i for i, v in enumerate(s)}
    keep = set(s)
    edges = [tuple(relabel[v] for v in e) for e in h.edges if keep.issuperset(e)]
    return Hypergraph(h.k, len(s), tuple(sorted(edges)))


def delete(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Remove a vertex set: induced subhypergraph on the complement."""
    drop = set(vertices)
    for v in drop:
        if v < 0 or v >= h.n:
            raise ParameterError(f"vertex {v} out of range [0, {h.n})")
    return induced(h, (v for v in range(h.n) if v not in drop))


def missing_edges(h: Hypergraph, vertices: Iterable[int]) -> list[tuple[int, ...]]:
    """All k-subsets of S absent from E(H), in lexicographic order."""
    s = sorted(set(vertices))
    if len(s) < h.k:
        raise ParameterError(f"need at least k={h.k} vertices, got {len(s)}")
    for v in s:
        if v < 0 or v >= h.n:
            raise ParameterError(f"vertex {v} out of range [0, {h.n})")
    present = h.edge_set
    return [e for e in combinations(s, h.k) if e not in present]


def density(h: Hypergraph) -> Fraction:
    """Exact edge density e(H) / C(n, k); requires n >= k."""
    if h.n < h.k:
        raise ParameterError(f"density needs n >= k, got n={h.n}, k={h.k}")
    return Fraction(h.edge_count, comb(h.n, h.k))


def serialize(h: Hypergraph) -> str:
    """Deterministic text form; equal hypergraphs serialize byte-identically."""
    lines = [f"{h.k} {h.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Hypergraph:
    """Parse the text format; see the module docstring for its grammar."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {line!r}")
        if header is None:
            if len(values) != 2:
                raise ParseError(f"line {lineno}: header must be 'k n'")
            header = (values[0], values[1])
            continue
        k, n = header
        if len(values) != k:
            raise ParseError(f"line {lineno}: expected {k} vertices, got {len(values)}")
        edge = tuple(sorted(values))
        if len(set(edge)) != k:
            raise ParseError(f"line {lineno}: repeated vertex in edge {values}")
        if edge[0] < 0 or edge[-1] >= n:
            raise ParseError(f"line {lineno}: vertex out of range [0, {n})")
        if edge in seen:
            raise ParseError(f"line {lineno}: duplicate edge {values}")
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise ParseError("missing 'k n' header line")
    k, n = header
    try:
        return Hypergraph(k, n, tuple(sorted(edges)))
    except ParameterError as exc:
        raise ParseError(str(exc))
