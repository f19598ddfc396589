"""Decision procedures for the two density-separation criteria.

Given k-graphs F' ⊆ F on m = v(F) vertices, the pair has separated Turán
densities when either condition holds:

  (1)  ex(m, F') + prod_{i=0}^{k-1} floor((m+i)/k)  <  e(F);
  (2)  for every k-partition V(F) = V_1 ∪ ... ∪ V_k in which every edge of
       F meets V_1, some j in {2..k} has F' ⊆ F - V_j.

Condition (1) delegates to the exact Turán search and reports "unknown"
when the search was not exhausted.  Condition (2) enumerates vertex
assignments as base-k counters (vertex 0 the most significant digit);
parts may be empty, and a partition with an empty V_j, j >= 2, passes
automatically since F - ∅ = F ⊇ F'.  Parts 2..k play symmetric roles, so
by default only assignments whose non-first labels appear in increasing
first-occurrence order are enumerated; the unpruned enumerator is kept for
cross-checks and returns the same verdict and, up to part relabeling, the
same first violating partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import embed
from .errors import ParameterError
from .exact import DEFAULT_BUDGET, turan_number
from .hypergraph import Hypergraph, delete

Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Condition1Result:
    m: int
    ex_value: int
    ex_exhausted: bool
    floor_product: int
    e_f: int
    holds: bool | None  # None when the Turán oracle was not exhausted


@dataclass(frozen=True)
class Condition2Result:
    holds: bool
    counterexample: Partition | None
    partitions_checked: int


@dataclass(frozen=True)
class SeparationReport:
    f: Hypergraph
    f_sub: Hypergraph
    condition1: Condition1Result
    condition2: Condition2Result
    verdict: str  # "separated" | "not-established"


def floor_product(m: int, k: int) -> int:
    """prod_{i=0}^{k-1} floor((m+i)/k); requires m >= k >= 1."""
    if k < 1 or m < k:
        raise ParameterError(f"need m >= k >= 1, got m={m}, k={k}")
    out = 1
    for i in range(k):
        out *= (m + i) // k
    return out


def de_caen_bound(m: int, k: int) -> Fraction:
    """Upper bound 1 - 1/C(m-1, k-1) for the density of the complete k-graph."""
    if k < 2 or m <= k:
        raise ParameterError(f"need m > k >= 2, got m={m}, k={k}")
    return 1 - Fraction(1, comb(m - 1, k - 1))


def _require_subgraph(f: Hypergraph, f_sub: Hypergraph) -> None:
    if f.k != f_sub.k:
        raise ParameterError(
            f"uniformity mismatch: F has k={f.k}, F' has k={f_sub.k}")
    if embed.contains(f, f_sub) is None:
        raise ParameterError("F' is not a subgraph of F")


def check_condition1(
    f: Hypergraph, f_sub: Hypergraph, budget: int = DEFAULT_BUDGET
) -> Condition1Result:
    """Evaluate condition (1) for the pair (F, F'); F' ⊆ F is required."""
    _require_subgraph(f, f_sub)
    m, k = f.n, f.k
    if m <= k:
        raise ParameterError(f"need v(F) > k, got v(F)={m}, k={k}")
    result = turan_number(m, f_sub, budget=budget)
    fp = floor_product(m, k)
    holds: bool | None = None
    if result.exhausted:
        holds = result.value + fp < f.edge_count
    return Condition1Result(
        m=m,
        ex_value=result.value,
        ex_exhausted=result.exhausted,
        floor_product=fp,
        e_f=f.edge_count,
        holds=holds,
    )


def check_condition2(
    f: Hypergraph, f_sub: Hypergraph, dedup: bool = True
) -> Condition2Result:
    """Evaluate condition (2) for the pair (F, F'); F' ⊆ F is required.

    On failure the counterexample is the first violating partition in
    enumeration order, as a k-tuple of vertex lists.
    """
    _require_subgraph(f, f_sub)
    m, k = f.n, f.k
    edge_list = f.edges
    # per edge: index of its last vertex, for completion bookkeeping
    edges_of_vertex: list[list[int]] = [[] for _ in range(m)]
    last_vertex = [e[-1] for e in edge_list]
    for i, e in enumerate(edge_list):
        for v in e:
            edges_of_vertex[v].append(i)

    # memoized containment of F' in F - V_j, keyed on the removed set
    memo: dict[int, bool] = {}

    def contained_after_removing(part_mask: int) -> bool:
        hit = memo.get(part_mask)
        if hit is None:
            removed = [v for v in range(m) if part_mask >> v & 1]
            hit = embed.contains(delete(f, removed), f_sub) is not None
            memo[part_mask] = hit
        return hit

    assignment = [0] * m
    part_masks = [0] * k
    # edge_missing[i]: vertices of edge i not yet assigned; edge_met[i]:
    # whether some assigned vertex of edge i landed in part 1
    edge_missing = [len(e) for e in edge_list]
    edge_met = [0] * len(edge_list)
    checked = 0
    violation: list[Partition] = []

    def visit_leaf() -> bool:
        nonlocal checked
        checked += 1
        for j in range(1, k):
            if part_masks[j] == 0 or contained_after_removing(part_masks[j]):
                return True
        violation.append(
            tuple(
                tuple(v for v in range(m) if assignment[v] == j)
                for j in range(k)
            )
        )
        return False

    def enumerate_from(v: int, used_labels: int) -> bool:
        if v == m:
            return visit_leaf()
        top = k if not dedup else min(used_labels + 2, k)
        for label in range(top):
            assignment[v] = label
            bit = 1 << v
            part_masks[label] |= bit
            filtered = False
            for i in edges_of_vertex[v]:
                edge_missing[i] -= 1
                if label == 0:
                    edge_met[i] += 1
                # an edge fully assigned outside part 1 fails the filter, so
                # no partition in this subtree qualifies
                if edge_missing[i] == 0 and edge_met[i] == 0:
                    filtered = True
            ok = True
            if not filtered:
                next_used = used_labels if label == 0 else max(used_labels, label)
                ok = enumerate_from(v + 1, next_used)
            for i in edges_of_vertex[v]:
                edge_missing[i] += 1
                if label == 0:
                    edge_met[i] -= 1
            part_masks[label] &= ~bit
            if not ok:
                return False
        return True

    holds = enumerate_from(0, 0)
    return Condition2Result(
        holds=holds,
        counterexample=None if holds else violation[0],
        partitions_checked=checked,
    )


def verify_counterexample(
    f: Hypergraph, f_sub: Hypergraph, partition: Partition
) -> bool:
    """Independent re-check that a partition really violates condition (2)."""
    m, k = f.n, f.k
    if len(partition) != k:
        return False
    seen: set[int] = set()
    for part in partition:
        for v in part:
            if v < 0 or v >= m or v in seen:
                return False
            seen.add(v)
    if len(seen) != m:
        return False
    first = set(partition[0])
    if any(not first.intersection(e) for e in f.edges):
        return False
    return all(
        embed.contains(delete(f, part), f_sub) is None for part in partition[1:]
    )


def separate(
    f: Hypergraph, f_sub: Hypergraph, budget: int = DEFAULT_BUDGET
) -> SeparationReport:
    """Run both criteria on (F, F') and combine the verdict."""
    cond1 = check_condition1(f, f_sub, budget=budget)
    cond2 = check_condition2(f, f_sub)
    separated = cond1.holds is True or cond2.holds
    return SeparationReport(
        f=f,
        f_sub=f_sub,
        condition1=cond1,
        condition2=cond2,
        verdict="separated" if separated else "not-established",
    )
