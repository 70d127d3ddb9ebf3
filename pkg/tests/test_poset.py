import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hibi.errors import CycleDetected, DuplicateElement, LimitExceeded, NotGraded, UnknownElement
from hibi.lattice import builtin_family
from hibi.poset import level, maximal_chains, order_ideals, poset_from_covers

DIAMOND = (["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def names(p, chain):
    return [p.elements[i] for i in chain]


def test_singleton():
    p = poset_from_covers(["a"], [])
    assert p.relation_pairs() == [(0, 0)]
    assert p.covers == ()


def test_chain_closure():
    p = poset_from_covers(["0", "1", "2"], [("0", "1"), ("1", "2")])
    assert len(p.relation_pairs()) == 6
    assert p.leq(0, 2)


def test_diamond_closure():
    p = poset_from_covers(*DIAMOND)
    # brute-force transitive closure over the cover graph
    rel = {(x, x) for x in range(4)} | {(p.index[a], p.index[b]) for a, b in DIAMOND[1]}
    while True:
        extra = {(x, z) for x, y in rel for y2, z in rel if y == y2} - rel
        if not extra:
            break
        rel |= extra
    assert set(p.relation_pairs()) == rel
    assert p.leq(0, 3) and (0, 3) not in p.covers


def test_redundant_covers_dropped():
    p = poset_from_covers(["0", "1", "2"], [("0", "1"), ("1", "2"), ("0", "2")])
    assert p.covers == ((0, 1), (1, 2))


def test_errors():
    with pytest.raises(CycleDetected):
        poset_from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownElement):
        poset_from_covers(["a"], [("a", "z")])
    with pytest.raises(DuplicateElement):
        poset_from_covers(["a", "a"], [])


def test_level():
    chain = poset_from_covers(["0", "1", "2"], [("0", "1"), ("1", "2")])
    assert level(chain, 2) == 2
    p = poset_from_covers(*DIAMOND)
    assert level(p, 3) == 2
    assert level(p, 1) == 1


def test_level_not_graded():
    # pentagon: 0 < a < b < 1 and 0 < c < 1
    p = poset_from_covers(["0", "a", "b", "c", "1"],
                          [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    with pytest.raises(NotGraded):
        level(p, 4)


def test_maximal_chains_small():
    chain = poset_from_covers(["0", "1", "2"], [("0", "1"), ("1", "2")])
    assert maximal_chains(chain) == [[0, 1, 2]]
    p = poset_from_covers(*DIAMOND)
    assert [names(p, c) for c in maximal_chains(p)] == [["0", "a", "1"], ["0", "b", "1"]]


def test_maximal_chains_grid_is_lattice_paths():
    l = builtin_family("grid:4x4")
    chains = maximal_chains(l.poset)
    assert len(chains) == comb(6, 3) == 20
    assert chains == sorted(chains)


def test_maximal_chains_cap():
    l = builtin_family("grid:4x4")
    with pytest.raises(LimitExceeded):
        maximal_chains(l.poset, cap=5)


def brute_ideals(p):
    n = len(p)
    out = []
    for r in range(n + 1):
        for subset in itertools.combinations(range(n), r):
            s = set(subset)
            if all(y in s for x in s for y in range(n) if p.leq(y, x)):
                out.append(sum(1 << x for x in subset))
    return out


@pytest.mark.parametrize("elements,covers,count", [
    (["a", "b"], [], 4),
    (["0", "1", "2"], [("0", "1"), ("1", "2")], 4),
    (["00", "01", "10", "11"], [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")], 6),
])
def test_order_ideals_counts(elements, covers, count):
    p = poset_from_covers(elements, covers)
    ideals = order_ideals(p)
    assert len(ideals) == count
    assert sorted(ideals) == sorted(brute_ideals(p))


@st.composite
def posets(draw, max_size=6):
    k = draw(st.integers(0, max_size))
    names = [str(i) for i in range(k)]
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return poset_from_covers(names, [(names[i], names[j]) for i, j in chosen])


@settings(max_examples=60, deadline=None)
@given(posets())
def test_poset_invariants(p):
    n = len(p)
    rel = set(p.relation_pairs())
    for x in range(n):
        assert (x, x) in rel
    for x, y in rel:
        if x != y:
            assert (y, x) not in rel
        for z in range(n):
            if (y, z) in rel:
                assert (x, z) in rel
    # stored covers are the transitive reduction, and reducing again is idempotent
    again = poset_from_covers(p.elements, [(p.elements[a], p.elements[b]) for a, b in p.covers])
    assert again.covers == p.covers
    assert set(again.relation_pairs()) == rel


@settings(max_examples=40, deadline=None)
@given(posets(max_size=5))
def test_order_ideals_union_intersection_closed(p):
    ideals = set(order_ideals(p))
    assert ideals == set(brute_ideals(p))
    for a in ideals:
        for b in ideals:
            assert a | b in ideals and a & b in ideals
