"""Decision procedures for the two separation criteria."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from turansep import embed
from turansep.criteria import (
    check_condition1,
    check_condition2,
    de_caen_bound,
    floor_product,
    separate,
    verify_counterexample,
)
from turansep.errors import ParameterError
from turansep.hypergraph import FamilySpec, build_named, delete, from_edges


def K(ell, k):
    return build_named(FamilySpec.complete(ell, k))


def Km(ell, k):
    return build_named(FamilySpec.complete_minus(ell, k))


def D(t, k):
    return build_named(FamilySpec.daisy(t, k))


def naive_condition2(f, fs):
    """Unoptimized oracle: plain base-k counter over all assignments."""
    m, k = f.n, f.k
    for assign in product(range(k), repeat=m):
        parts = [[v for v in range(m) if assign[v] == j] for j in range(k)]
        if any(not set(parts[0]) & set(e) for e in f.edges):
            continue
        if not any(
            not parts[j] or embed.contains(delete(f, parts[j]), fs) is not None
            for j in range(1, k)
        ):
            return False, tuple(tuple(p) for p in parts)
    return True, None


def test_floor_product():
    for k in range(2, 7):
        assert floor_product(k + 1, k) == 2
        assert floor_product(k, k) == 1
    assert floor_product(7, 3) == 12
    with pytest.raises(ParameterError):
        floor_product(2, 3)


def test_de_caen_bound():
    assert de_caen_bound(4, 3) == Fraction(2, 3)
    assert de_caen_bound(5, 3) == Fraction(5, 6)
    assert de_caen_bound(6, 4) == Fraction(9, 10)
    with pytest.raises(ParameterError):
        de_caen_bound(3, 3)


def test_condition1_daisy_pairs():
    r = check_condition1(D(4, 4), D(2, 4))
    assert r.holds is True
    assert (r.ex_value, r.floor_product, r.e_f) == (1, 2, 4)


def test_condition1_self_pair_fails():
    r = check_condition1(K(4, 3), K(4, 3))
    assert r.holds is False
    assert r.ex_value + r.floor_product == 5


def test_condition1_k5_minus_vs_k4():
    # ex(5, K4) = 7 and the floor product is 4, so 11 >= 9 and it fails
    r = check_condition1(Km(5, 3), K(4, 3))
    assert (r.ex_value, r.floor_product, r.e_f, r.holds) == (7, 4, 9, False)


def test_condition1_unknown_under_budget():
    r = check_condition1(Km(5, 3), K(4, 3), budget=3)
    assert r.holds is None and not r.ex_exhausted


def test_condition1_requires_subgraph():
    with pytest.raises(ParameterError):
        check_condition1(D(2, 3), K(4, 3))


def test_condition2_cliques():
    assert check_condition2(K(5, 3), K(4, 3)).holds
    assert check_condition2(Km(6, 4), K(5, 4)).holds


def test_condition2_failure_witness():
    r = check_condition2(Km(5, 3), K(4, 3))
    assert not r.holds
    v1, v2, v3 = r.counterexample
    assert sorted(map(len, (v1, v2, v3)), reverse=True) == [3, 1, 1]
    # the missing edge (2,3,4) lies inside the first part
    assert set(v1) == {2, 3, 4}
    assert verify_counterexample(Km(5, 3), K(4, 3), r.counterexample)


def test_verify_counterexample_rejects_bad_partitions():
    f, fs = Km(5, 3), K(4, 3)
    assert not verify_counterexample(f, fs, ((0, 1, 2), (3,), (4,)))
    assert not verify_counterexample(f, fs, ((2, 3, 4), (0, 1), ()))
    assert not verify_counterexample(f, fs, ((2, 3, 4), (0,), (0,)))
    assert not verify_counterexample(f, fs, ((2, 3, 4), (0,)))


def test_condition2_dedup_matches_unpruned_and_oracle():
    pairs = [
        (K(5, 3), K(4, 3)),
        (K(6, 3), K(5, 3)),
        (Km(5, 3), Km(4, 3)),
        (Km(6, 3), Km(5, 3)),
        (Km(6, 4), K(5, 4)),
        (Km(5, 3), K(4, 3)),
        (D(4, 3), D(2, 3)),
    ]
    for f, fs in pairs:
        fast = check_condition2(f, fs, dedup=True)
        slow = check_condition2(f, fs, dedup=False)
        naive_holds, naive_witness = naive_condition2(f, fs)
        assert fast.holds == slow.holds == naive_holds
        if not fast.holds:
            assert slow.counterexample == naive_witness
            # dedup may relabel parts 2..k; compare as unordered families
            assert sorted(map(sorted, fast.counterexample[1:])) == sorted(
                map(sorted, slow.counterexample[1:]))
            assert fast.counterexample[0] == slow.counterexample[0]


def test_condition2_random_targets_against_oracle():
    rng = random.Random(5)
    k4 = K(4, 3)
    for _ in range(10):
        n = rng.randint(4, 6)
        cand = list(combinations(range(n), 3))
        edges = set(rng.sample(cand, rng.randint(2, len(cand))))
        edges.add((0, 1, 2))
        f = from_edges(3, n, edges)
        fs_pool = [fs for fs in (k4, D(2, 3), D(1, 3)) if embed.contains(f, fs)]
        if not fs_pool:
            continue
        fs = fs_pool[0]
        got = check_condition2(f, fs)
        expect_holds, _ = naive_condition2(f, fs)
        assert got.holds == expect_holds
        if got.counterexample is not None:
            assert verify_counterexample(f, fs, got.counterexample)


def test_condition2_relabeling_invariance():
    rng = random.Random(31)
    f, fs = Km(5, 3), K(4, 3)
    base = check_condition2(f, fs).holds
    for _ in range(5):
        perm = list(range(5))
        rng.shuffle(perm)
        relabeled = from_edges(
            3, 5, [tuple(perm[v] for v in e) for e in f.edges])
        assert check_condition2(relabeled, fs).holds == base
        assert check_condition1(relabeled, fs).holds == check_condition1(f, fs).holds


def test_condition2_trivial_empty_subgraph():
    # empty F' on k-1 vertices embeds into F - V_j for some j in every
    # partition that passes the edge filter
    rng = random.Random(13)
    for _ in range(8):
        n = rng.randint(4, 6)
        cand = list(combinations(range(n), 3))
        f = from_edges(3, n, rng.sample(cand, rng.randint(1, len(cand))))
        empty = from_edges(3, 2, [])
        assert check_condition2(f, empty).holds


def test_separate_verdicts():
    r = separate(K(5, 3), K(4, 3))
    assert r.verdict == "separated"
    assert r.condition1.holds is False and r.condition2.holds

    r = separate(Km(7, 5), K(6, 5))
    assert r.verdict == "separated" and r.condition2.holds

    r = separate(D(4, 4), D(2, 4))
    assert r.verdict == "separated" and r.condition1.holds is True

    r = separate(Km(5, 3), K(4, 3))
    assert r.verdict == "not-established"
    assert r.condition1.holds is False and not r.condition2.holds
