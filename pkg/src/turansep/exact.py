"""Exact small-case Turán numbers ex(n, F) with extremal witnesses.

The search is branch and bound over the lexicographic list of all C(n, k)
candidate edges.  Every copy of F inside the complete k-graph on [n] is
precomputed as a bitmask over candidate-edge indices, so "does including
this edge close a copy of F" is a handful of mask tests against the copies
through that edge; this is the include/exclude contract with copy detection
restricted to embeddings forced through the new edge.  A branch is cut when
the included count plus the number of still-addable candidates cannot beat
the incumbent.  Filtering the addable list is value-preserving: an edge
that closes a copy against the current inclusion can never be added later
on the same branch.

Two further layers that do not change returned values:
  - exclude chains are collapsed into a choose-next-included-edge loop;
  - at the root, only the first branch is explored (root_symmetry): any
    optimum relabels, by a vertex permutation, to one containing the first
    candidate edge, and that relabeling also preserves the lexicographically
    smallest optimal edge list, which is the witness tie-break.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .errors import BudgetExceededError, ParameterError
from .hypergraph import FamilySpec, Hypergraph

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class TuranResult:
    n: int
    family: FamilySpec
    value: int
    witness: Hypergraph
    nodes_explored: int
    exhausted: bool


class _Budget(Exception):
    pass


class CopyIndex:
    """Copies of F inside the complete k-graph on [n], as edge-index masks.

    through[j] holds, for every copy using candidate edge j, the mask of the
    copy's other edges; adding edge j to an F-free inclusion set creates a
    copy exactly when one of those masks is already fully included.
    """

    def __init__(self, n: int, f: Hypergraph):
        self.n = n
        self.f = f
        self.cand: list[tuple[int, ...]] = list(combinations(range(n), f.k))
        self.index = {e: i for i, e in enumerate(self.cand)}
        masks = self._copy_masks(n, f)
        through: list[list[int]] = [[] for _ in self.cand]
        for m in masks:
            rest = m
            while rest:
                low = rest & -rest
                through[low.bit_length() - 1].append(m ^ low)
                rest ^= low
        self.through: tuple[tuple[int, ...], ...] = tuple(tuple(t) for t in through)

    def _copy_masks(self, n: int, f: Hypergraph) -> set[int]:
        k, vf, ef = f.k, f.n, f.edge_count
        if vf > n:
            return set()
        idx = self.index
        masks: set[int] = set()
        if vf == k + 1:
            # any ef distinct k-subsets of a (k+1)-set form a copy (daisy
            # family, including the complete and complete-minus cases)
            for s in combinations(range(n), k + 1):
                subs = [idx[e] for e in combinations(s, k)]
                for pick in combinations(subs, ef):
                    m = 0
                    for j in pick:
                        m |= 1 << j
                    masks.add(m)
            return masks
        if ef == comb(vf, k):
            for s in combinations(range(n), vf):
                m = 0
                for e in combinations(s, k):
                    m |= 1 << idx[e]
                masks.add(m)
            return masks
        if ef == comb(vf, k) - 1:
            for s in combinations(range(n), vf):
                subs = [idx[e] for e in combinations(s, k)]
                full = 0
                for j in subs:
                    full |= 1 << j
                for j in subs:
                    masks.add(full ^ (1 << j))
            return masks
        # generic: image edge sets over all injections V(F) -> [n]
        for image in permutations(range(n), vf):
            m = 0
            for e in f.edges:
                m |= 1 << idx[tuple(sorted(image[v] for v in e))]
            masks.add(m)
        return masks

    def addable(self, inc: int, j: int) -> bool:
        for m in self.through[j]:
            if m & inc == m:
                return False
        return True


def turan_number(
    n: int,
    f: Hypergraph,
    budget: int = DEFAULT_BUDGET,
    family: FamilySpec | None = None,
    root_symmetry: bool = True,
) -> TuranResult:
    """Maximum edge count of an F-free k-graph on n vertices.

    Exact when the search exhausts within the node budget; otherwise the
    best lower bound found so far is returned with exhausted=False.  The
    witness is the lexicographically smallest optimal edge list.
    """
    if budget <= 0:
        raise ParameterError(f"budget must be positive, got {budget}")
    k = f.k
    if family is None:
        family = FamilySpec.custom(f)
    if f.edge_count == 0:
        if f.n <= n:
            raise ParameterError("F without edges is contained in every graph")
        full = tuple(combinations(range(n), k))
        return TuranResult(n, family, len(full), Hypergraph(k, n, full), 0, True)

    engine = CopyIndex(n, f)
    cand = engine.cand
    through = engine.through
    chosen: list[int] = []
    state = {"best": 0, "witness": (), "nodes": 0, "exhausted": True}

    def rec(alive: list[int], count: int, inc: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["exhausted"] = False
            raise _Budget
        if count > state["best"]:
            state["best"] = count
            state["witness"] = tuple(chosen)
        remaining = len(alive)
        if count + remaining <= state["best"]:
            return
        best = state["best"]
        for pos, j in enumerate(alive):
            if count + remaining - pos <= state["best"]:
                break
            inc2 = inc | (1 << j)
            tail = alive[pos + 1:]
            new_alive = []
            for j2 in tail:
                for m in through[j2]:
                    if m & inc2 == m:
                        break
                else:
                    new_alive.append(j2)
            chosen.append(j)
            rec(new_alive, count + 1, inc2)
            chosen.pop()

    root_alive = [j for j in range(len(cand)) if engine.addable(0, j)]
    try:
        if root_alive and root_symmetry:
            # sound cut: some optimum (and the lex-min one) contains cand[j0]
            j0 = root_alive[0]
            inc = 1 << j0
            chosen.append(j0)
            state["best"] = 1
            state["witness"] = (j0,)
            rec([j for j in root_alive[1:] if engine.addable(inc, j)], 1, inc)
            chosen.pop()
        else:
            rec(root_alive, 0, 0)
    except _Budget:
        pass
    edges = tuple(cand[j] for j in state["witness"])
    witness = Hypergraph(k, n, edges)
    return TuranResult(
        n, family, state["best"], witness, state["nodes"], state["exhausted"]
    )


def extremal_witness(
    n: int, f: Hypergraph, budget: int = DEFAULT_BUDGET
) -> Hypergraph:
    """An F-free graph attaining ex(n, F); errors out if the search was cut."""
    result = turan_number(n, f, budget=budget)
    if not result.exhausted:
        raise BudgetExceededError(
            f"turan search for n={n} not exhausted within {budget} nodes"
        )
    return result.witness


def random_maximal_free(n: int, f: Hypergraph, seed: int) -> Hypergraph:
    """Greedy maximal F-free graph over a seed-shuffled candidate order."""
    engine = CopyIndex(n, f)
    order = list(range(len(engine.cand)))
    random.Random(seed).shuffle(order)
    inc = 0
    for j in order:
        if engine.addable(inc, j):
            inc |= 1 << j
    edges = [engine.cand[j] for j in range(len(engine.cand)) if inc >> j & 1]
    return Hypergraph(f.k, n, tuple(edges))
