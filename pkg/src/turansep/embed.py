"""Subhypergraph containment and freeness checks.

A copy of F in H is an injective, edge-preserving vertex map (ordinary
subgraph containment, not induced).  ``contains`` returns the first
embedding in a fixed search order, so results are deterministic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ParameterError
from .hypergraph import FamilySpec, Hypergraph

_SCAN_CHUNK = 4  # first-vertex slice width per worker task


@dataclass(frozen=True)
class Embedding:
    """Vertex map of a copy: mapping[f_vertex] = h_vertex."""

    mapping: tuple[int, ...]


def validate_embedding(h: Hypergraph, f: Hypergraph, emb: Embedding) -> bool:
    """Independent check that an embedding is injective and edge-preserving."""
    m = emb.mapping
    if len(m) != f.n or len(set(m)) != f.n:
        return False
    if any(v < 0 or v >= h.n for v in m):
        return False
    return all(tuple(sorted(m[v] for v in e)) in h.edge_set for e in f.edges)


def _vertex_order(f: Hypergraph) -> list[int]:
    # descending degree, index as tie-break; standard static ordering
    return sorted(range(f.n), key=lambda v: (-f.degrees[v], v))


def contains(h: Hypergraph, f: Hypergraph) -> Embedding | None:
    """First embedding of F into H in deterministic search order, if any."""
    if h.k != f.k:
        raise ParameterError(f"uniformity mismatch: H has k={h.k}, F has k={f.k}")
    if f.n > h.n or f.edge_count > h.edge_count:
        return None
    order = _vertex_order(f)
    pos = {v: i for i, v in enumerate(order)}
    # F-edges become checkable once their last vertex (in `order`) is mapped
    edges_at: list[list[tuple[int, ...]]] = [[] for _ in range(f.n)]
    for e in f.edges:
        edges_at[max(pos[v] for v in e)].append(e)
    f_degs = f.degrees
    h_degs = h.degrees
    h_edges = h.edge_set
    image = [-1] * f.n
    used = [False] * h.n

    def extend(depth: int) -> bool:
        if depth == f.n:
            return True
        fv = order[depth]
        need = f_degs[fv]
        for hv in range(h.n):
            if used[hv] or h_degs[hv] < need:
                continue
            image[fv] = hv
            ok = all(
                tuple(sorted(image[v] for v in e)) in h_edges
                for e in edges_at[depth]
            )
            if ok:
                used[hv] = True
                if extend(depth + 1):
                    return True
                used[hv] = False
            image[fv] = -1
        return False

    if extend(0):
        return Embedding(tuple(image))
    return None


def is_free(h: Hypergraph, f: Hypergraph) -> bool:
    """True iff H contains no copy of F."""
    return contains(h, f) is None


def spanned_edge_violation(
    h: Hypergraph, r: int, max_edges: int, threads: int = 1
) -> tuple[tuple[int, ...], int] | None:
    """First r-subset (lexicographically) spanning more than max_edges edges.

    Returns (subset, spanned count) or None when every r-subset passes.
    The scan may be partitioned across threads; the reported violation is
    the lexicographic first regardless of schedule.
    """
    if not h.k <= r <= h.n:
        raise ParameterError(f"need k <= r <= n, got k={h.k}, r={r}, n={h.n}")
    if threads <= 1:
        return _scan_slice(h, r, max_edges, range(h.n - r + 1))
    firsts = range(h.n - r + 1)
    slices = [firsts[i:i + _SCAN_CHUNK] for i in range(0, len(firsts), _SCAN_CHUNK)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = pool.map(lambda sl: _scan_slice(h, r, max_edges, sl), slices)
        for res in results:  # slices are in lexicographic order already
            if res is not None:
                return res
    return None


def spanned_edge_threshold_free(
    h: Hypergraph, r: int, max_edges: int, threads: int = 1
) -> bool:
    """True iff every r-subset of V(H) spans at most max_edges edges.

    With (k, r, max_edges) = (3, 5, 8) this is exactly freeness from the
    complete 3-graph on five vertices minus one edge.
    """
    return spanned_edge_violation(h, r, max_edges, threads=threads) is None


def _scan_slice(h, r, max_edges, firsts):
    if h.k == 3:
        return _scan_slice_k3(h, r, max_edges, firsts)
    return _scan_slice_generic(h, r, max_edges, firsts)


def _scan_slice_k3(h, r, max_edges, firsts):
    n = h.n
    # pair_top[u*n+v] for u<v: bitmask of w>v with {u,v,w} an edge, so each
    # edge inside a subset is counted exactly once via its smallest pair
    pair_top = [0] * (n * n)
    for a, b, c in h.edges:
        pair_top[a * n + b] |= 1 << c
    bit = [1 << v for v in range(n)]
    for first in firsts:
        base = bit[first]
        row = first * n
        for rest in combinations(range(first + 1, n), r - 1):
            smask = base
            for v in rest:
                smask |= bit[v]
            count = 0
            for u in rest:
                count += (pair_top[row + u] & smask).bit_count()
            if count <= max_edges:
                for i, u in enumerate(rest):
                    urow = u * n
                    for v in rest[i + 1:]:
                        count += (pair_top[urow + v] & smask).bit_count()
                    if count > max_edges:
                        break
            if count > max_edges:
                return (first,) + rest, _count_inside(h, (first,) + rest)
    return None


def _scan_slice_generic(h, r, max_edges, firsts):
    n = h.n
    by_max = [[] for _ in range(n)]
    for e, em in zip(h.edges, h.edge_masks):
        by_max[e[-1]].append(em)
    bit = [1 << v for v in range(n)]
    for first in firsts:
        for rest in combinations(range(first + 1, n), r - 1):
            subset = (first,) + rest
            smask = bit[first]
            for v in rest:
                smask |= bit[v]
            count = 0
            for v in subset:
                for em in by_max[v]:
                    if em & smask == em:
                        count += 1
            if count > max_edges:
                return subset, count
    return None


def _count_inside(h: Hypergraph, subset: tuple[int, ...]) -> int:
    smask = 0
    for v in subset:
        smask |= 1 << v
    return sum(1 for em in h.edge_masks if em & smask == em)


def threshold_free_params(spec: FamilySpec) -> tuple[int, int] | None:
    """(r, max_edges) such that F-freeness equals the r-subset threshold test.

    Complete, complete-minus and daisy targets admit such a reduction: a
    copy of any of them lives on exactly r vertices and needs only enough
    edges spanned there.  Other families return None.
    """
    if spec.kind == "complete":
        return spec.ell, comb(spec.ell, spec.k) - 1
    if spec.kind == "complete-minus":
        return spec.ell, comb(spec.ell, spec.k) - 2
    if spec.kind == "daisy":
        return spec.k + 1, spec.t - 1
    return None
