"""Core hypergraph type, named families, and the text format."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from turansep.errors import ParameterError, ParseError
from turansep.hypergraph import (
    FamilySpec,
    Hypergraph,
    build_named,
    delete,
    density,
    from_edges,
    induced,
    missing_edges,
    parse,
    serialize,
)


def K(ell, k):
    return build_named(FamilySpec.complete(ell, k))


def Km(ell, k):
    return build_named(FamilySpec.complete_minus(ell, k))


@st.composite
def hypergraphs(draw, max_n=8, ks=(2, 3, 4)):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=k, max_value=max_n))
    from itertools import combinations

    cand = list(combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(cand), unique=True, max_size=len(cand)))
    return from_edges(k, n, chosen)


def test_build_complete():
    h = K(4, 3)
    assert h.n == 4 and h.edge_count == 4
    assert K(5, 3).edge_count == 10


def test_build_s6():
    h = build_named(FamilySpec.s6())
    assert h.n == 6 and h.edge_count == 10


def test_build_complete_minus():
    h = Km(5, 3)
    assert h.edge_count == 9
    # the removed edge is the lexicographically last one
    assert (2, 3, 4) not in h.edge_set


def test_build_daisy():
    for k in (2, 3, 4, 5):
        for t in range(1, k + 2):
            h = build_named(FamilySpec.daisy(t, k))
            assert h.n == k + 1 and h.edge_count == t
    assert build_named(FamilySpec.daisy(2, 3)).edges == ((0, 1, 2), (0, 1, 3))


@pytest.mark.parametrize(
    "make",
    [
        lambda: FamilySpec.complete(3, 3),
        lambda: FamilySpec.complete_minus(4, 4),
        lambda: FamilySpec.daisy(0, 3),
        lambda: FamilySpec.daisy(5, 3),
        lambda: FamilySpec.complete(5, 1),
    ],
)
def test_bad_family_parameters(make):
    with pytest.raises(ParameterError):
        make()


def test_build_named_deterministic():
    a = serialize(build_named(FamilySpec.daisy(3, 4)))
    b = serialize(build_named(FamilySpec.daisy(3, 4)))
    assert a == b


def test_induced_complete_hereditary():
    assert induced(K(5, 3), [0, 2, 3, 4]) == K(4, 3)
    assert induced(K(5, 3), [1, 2, 3, 4]) == K(4, 3)


def test_induced_identity():
    s6 = build_named(FamilySpec.s6())
    assert induced(s6, range(6)) == s6


def test_induced_s6_prefix():
    # filtering the ten listed triples by {0,1,2,3} leaves exactly two
    h = induced(build_named(FamilySpec.s6()), [0, 1, 2, 3])
    assert h.edges == ((0, 1, 2), (1, 2, 3))


def test_induced_out_of_range():
    with pytest.raises(ParameterError):
        induced(K(4, 3), [0, 4])


def test_delete():
    s6 = build_named(FamilySpec.s6())
    assert delete(s6, []) == s6
    assert delete(K(5, 3), [1]) == K(4, 3)
    # dropping a vertex of the missing edge of K5- leaves a complete graph
    assert delete(Km(5, 3), [3]) == K(4, 3)
    assert delete(Km(5, 3), [0]) != K(4, 3)


def test_missing_edges():
    assert missing_edges(K(5, 3), range(5)) == []
    empty = Hypergraph(3, 5, ())
    assert len(missing_edges(empty, range(5))) == 10
    assert missing_edges(Km(5, 3), range(5)) == [(2, 3, 4)]
    with pytest.raises(ParameterError):
        missing_edges(K(5, 3), [0, 1])


def test_missing_edges_k4_free_five_sets():
    # a K4-free 3-graph misses at least three edges on every 5-set
    from itertools import combinations

    from turansep.exact import random_maximal_free

    k4 = K(4, 3)
    for seed in range(5):
        h = random_maximal_free(8, k4, seed)
        for s in combinations(range(8), 5):
            assert len(missing_edges(h, s)) >= 3


def test_density():
    assert density(K(4, 3)) == 1
    assert density(build_named(FamilySpec.s6())) == Fraction(1, 2)
    assert density(Hypergraph(3, 5, ())) == 0
    with pytest.raises(ParameterError):
        density(Hypergraph(3, 2, ()))


def test_canonical_constructor_rejects_noncanonical():
    with pytest.raises(ParameterError):
        Hypergraph(3, 4, ((0, 2, 1),))
    with pytest.raises(ParameterError):
        Hypergraph(3, 4, ((0, 1, 3), (0, 1, 2)))
    with pytest.raises(ParameterError):
        Hypergraph(3, 3, ((0, 1, 3),))


def test_from_edges_duplicate():
    with pytest.raises(ParameterError):
        from_edges(3, 4, [(0, 1, 2), (2, 1, 0)])


@given(hypergraphs())
def test_round_trip(h):
    assert parse(serialize(h)) == h


@given(hypergraphs(), st.data())
def test_induced_composition(h, data):
    s = data.draw(st.lists(st.integers(0, max(h.n - 1, 0)), unique=True))
    if h.n == 0:
        s = []
    inner = induced(h, s)
    s_sorted = sorted(set(s))
    t = data.draw(st.lists(st.integers(0, max(inner.n - 1, 0)), unique=True,
                           max_size=inner.n))
    t = [v for v in t if v < inner.n]
    assert induced(inner, t) == induced(h, [s_sorted[i] for i in t])


@given(hypergraphs(), st.data())
def test_delete_edge_count_identity(h, data):
    s = data.draw(st.lists(st.integers(0, max(h.n - 1, 0)), unique=True))
    if h.n == 0:
        s = []
    touched = sum(1 for e in h.edges if set(e) & set(s))
    assert delete(h, s).edge_count + touched == h.edge_count


def test_parse_tolerates_comments_and_unsorted_edges():
    h = parse("# header comment\n3 5\n2 1 0\n\n# more\n0 3 4\n")
    assert h.edges == ((0, 1, 2), (0, 3, 4))


@pytest.mark.parametrize(
    "text",
    [
        "3 5\n0 1 2\n2 1 0\n",  # duplicate
        "3 5\n0 1\n",  # wrong arity
        "3 5\n0 1 7\n",  # out of range
        "3 5\n0 1 1\n",  # repeated vertex
        "0 1 2\n",  # header is not 'k n'
        "",  # missing header
        "3 5\nx y z\n",  # non-integer
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)
