import pytest

from corpus import family_lattices, random_lattices
from hibi.errors import LatticeMismatch, LimitExceeded, NotEmbedded
from hibi.faces import (
    brute_force_faces,
    closure_contains,
    embedded_hull,
    enumerate_faces,
    is_embedded_sublattice,
    make_face,
)
from hibi.lattice import builtin_family, embedded_violations, lattice_from_poset
from hibi.oracle import RationalMatrix, rank
from hibi.poset import poset_from_covers
from hibi.toric import semigroup_generators

B2 = (["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


@pytest.fixture
def b2():
    return lattice_from_poset(poset_from_covers(*B2))


def mask(l, names):
    return l.mask_of(names)


def test_is_embedded_examples(b2, lat):
    assert not is_embedded_sublattice(b2, mask(b2, ["0", "1"]))
    g = lat("grid:4x4")
    block = mask(g, ["(2,2)", "(2,3)", "(3,2)", "(3,3)"])
    assert is_embedded_sublattice(g, block)
    lam = mask(g, ["(2,2)", "(3,2)", "(3,3)", "(1,1)", "(1,2)", "(2,1)", "(3,4)", "(4,3)", "(4,4)"])
    assert not is_embedded_sublattice(g, lam)
    x, y = g.poset.index["(2,4)"], g.poset.index["(4,2)"]
    assert ("embedded", x, y) in embedded_violations(g, lam)
    assert g.elements[g.join(x, y)] == "(4,4)" and g.elements[g.meet(x, y)] == "(2,2)"


def test_empty_set_is_embedded(b2):
    assert is_embedded_sublattice(b2, 0)


def test_face_counts(b2, lat):
    assert len(enumerate_faces(lat("chain:3"))) == 8
    faces = enumerate_faces(b2)
    assert [f.names() for f in faces] == [
        [], ["0"], ["a"], ["b"], ["1"],
        ["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"], ["0", "a", "b", "1"],
    ]
    assert len(enumerate_faces(lat("chain:1"))) == 2
    for n in range(1, 7):
        assert len(enumerate_faces(builtin_family(f"chain:{n}"))) == 2 ** n


def test_face_cap(lat):
    with pytest.raises(LimitExceeded):
        enumerate_faces(lat("grid:4x4"), cap=10)


def test_closure_contains(b2, lat):
    full = make_face(b2, 0b1111)
    empty = make_face(b2, 0)
    f = make_face(b2, mask(b2, ["0", "a"]))
    g = make_face(b2, mask(b2, ["0", "b"]))
    assert closure_contains(full, f) and closure_contains(f, empty)
    assert not closure_contains(f, g)
    other = lat("chain:2")
    with pytest.raises(LatticeMismatch):
        closure_contains(f, make_face(other, 1))


def test_make_face_rejects(b2):
    with pytest.raises(NotEmbedded) as info:
        make_face(b2, mask(b2, ["0", "1"]))
    assert set(info.value.witness) == {"a", "b"}


def test_hull(b2):
    assert embedded_hull(b2, mask(b2, ["0", "1"])) == 0b1111
    assert embedded_hull(b2, mask(b2, ["a"])) == mask(b2, ["a"])


@pytest.mark.parametrize("l", family_lattices() + random_lattices(count=60), ids=lambda l: l.name)
def test_enumeration_matches_brute_force(l):
    faces = enumerate_faces(l)
    assert [f.mask for f in faces] == brute_force_faces(l)
    gens = semigroup_generators(l)
    for f in faces:
        assert f.orbit_dim + f.cone_dim == l.dim
        # orbit dimension = rank of the generators supported on D
        rows = [gens[x] for x in sorted(f.D)]
        assert (rank(RationalMatrix(rows)) if rows else 0) == f.orbit_dim
        assert f.point.coords == tuple(int(x in f.D) for x in range(len(l)))
    for f in faces:
        for g in faces:
            if f.mask != g.mask and closure_contains(f, g):
                assert g.orbit_dim < f.orbit_dim
