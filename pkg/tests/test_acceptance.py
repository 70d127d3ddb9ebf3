"""Acceptance criteria, one test per criterion.

The summary section printed by conftest lists PASS/FAIL per criterion.
"""
import json
import time
from itertools import combinations

import pytest

from corpus import FAMILIES, corpus, random_lattices, random_poset
from hibi.cli import main
from hibi.cotangent import cotangent_report, lambda_set
from hibi.errors import LimitExceeded, NotEmbedded
from hibi.faces import enumerate_faces, is_embedded_sublattice, make_face
from hibi.lattice import builtin_family, embedded_violations, lattice_from_irreducibles, lattice_isomorphism
from hibi.oracle import (
    RationalMatrix,
    jacobian_at,
    kernel_basis,
    semigroup_rank_oracle,
    tangent_dim_oracle,
)
from hibi.poset import bits, maximal_chains
from hibi.reports import load_document, read_dot
from hibi.singular import singular_locus
from hibi.toric import distinguished_point, on_variety, point_from_mask, support

pytestmark = pytest.mark.acceptance


@pytest.fixture(scope="module")
def lattices():
    return corpus()


def names(l, idx):
    return {l.elements[i] for i in idx}


def test_criterion_1_grid_lambda_example():
    start = time.perf_counter()
    l = builtin_family("grid:4x4")
    face = make_face(l, l.mask_of(["(2,2)", "(2,3)", "(3,2)", "(3,3)"]))
    gamma = l.poset.indices(["(2,2)", "(3,2)", "(3,3)"])
    lam = lambda_set(l, face, gamma)
    expected = {"(2,2)", "(3,2)", "(3,3)", "(1,1)", "(1,2)", "(2,1)", "(3,4)", "(4,3)", "(4,4)"}
    assert names(l, lam) == expected
    assert not is_embedded_sublattice(l, lam)
    pairs = {frozenset((l.elements[x], l.elements[y])) for _, x, y in embedded_violations(l, lam)}
    assert frozenset(("(2,4)", "(4,2)")) in pairs
    assert time.perf_counter() - start < 1.0


def test_criterion_2_oracle_equivalence(lattices):
    start = time.perf_counter()
    assert len(lattices) - len(FAMILIES) >= 200
    assert all(len(l.irreducible_poset()) <= 4 for l in lattices[len(FAMILIES):])
    mismatches = []
    checked = 0
    for l in lattices:
        for f in enumerate_faces(l):
            combinatorial = cotangent_report(l, f).tangent_dim
            if combinatorial != tangent_dim_oracle(l, f):
                mismatches.append((l.name, f.names()))
            checked += 1
    assert not mismatches, mismatches[:5]
    assert checked > 5000
    assert time.perf_counter() - start < 300


def test_criterion_3_gamma_independence(lattices):
    for l in lattices:
        for f in enumerate_faces(l):
            try:
                chains = maximal_chains(l.poset, cap=50, mask=f.mask)
            except LimitExceeded:
                continue
            dims = {cotangent_report(l, f, gamma=c).tangent_dim for c in chains}
            assert len(dims) == 1, (l.name, f.names(), dims)


def test_criterion_4_dimension_consistency(lattices):
    for l in lattices:
        sizes = {len(c) for c in maximal_chains(l.poset)}
        assert sizes == {l.dim}, l.name
        assert semigroup_rank_oracle(l) == l.dim, l.name


def test_criterion_5_singular_locus(lattices):
    for l in lattices:
        faces = enumerate_faces(l)
        locus = singular_locus(l)
        by_oracle = {f.mask for f in faces if tangent_dim_oracle(l, f) > l.dim}
        closure = {f.mask for f in faces
                   if any(f.mask & c.mask == f.mask for c in locus.components)}
        assert by_oracle == closure, l.name
    b2 = builtin_family("boolean:2")
    assert [c.names() for c in singular_locus(b2).components] == [[]]
    s24 = builtin_family("subsets:2,4")
    assert [c.names() for c in singular_locus(s24).components] == [["12", "34"]]


def test_criterion_6_kernel_functionals(lattices):
    for l in lattices:
        for f in enumerate_faces(l):
            r = cotangent_report(l, f)
            basis = kernel_basis(jacobian_at(l, f.point))
            for v in basis:
                assert all(v[a] == 0 for a in r.e_set), (l.name, f.names())
                for cls in r.classes:
                    assert len({v[i] for i in cls}) == 1, (l.name, f.names(), cls)
            cols = list(r.gamma) + list(r.representatives)
            sub = RationalMatrix([[v[c] for c in cols] for v in basis], ncols=len(cols))
            assert len(basis) == r.tangent_dim
            assert sub.rank() == r.tangent_dim, (l.name, f.names())
            # coordinates on D beyond the chain add nothing to the span
            span = RationalMatrix([[v[c] for c in list(r.gamma) + list(bits(f.mask))] for v in basis],
                                  ncols=len(r.gamma) + len(f))
            gamma_only = RationalMatrix([[v[c] for c in r.gamma] for v in basis], ncols=len(r.gamma))
            assert span.rank() == gamma_only.rank() == len(r.gamma)


def test_criterion_7_round_trips(tmp_path, capsys):
    import random

    start = time.perf_counter()
    # Birkhoff: poset -> ideal lattice -> irreducibles recovers the poset
    rng = random.Random(7)
    for _ in range(100):
        p = random_poset(rng, max_size=5)
        l = lattice_from_irreducibles(p)
        q = l.irreducible_poset()
        assert sorted(e[1:-1] for e in q.elements) == sorted(p.elements)
        rel = {(q.elements[a][1:-1], q.elements[b][1:-1]) for a, b in q.relation_pairs()}
        assert rel == {(p.elements[a], p.elements[b]) for a, b in p.relation_pairs()}
    for l in [builtin_family(d) for d in FAMILIES] + random_lattices(50):
        again = lattice_from_irreducibles(l.irreducible_poset())
        assert lattice_isomorphism(l, again) is not None, l.name

        # face support: D -> P_D -> D
        for f in enumerate_faces(l):
            assert support(l, distinguished_point(l, f)) == f.mask

    # the 0/1 point of a subset lies on X_L exactly when the subset is embedded
    for d in ["boolean:2", "grid:2x3", "subsets:2,4", "chain:3"]:
        l = builtin_family(d)
        for mask in range(1 << len(l)):
            assert on_variety(l, point_from_mask(l, mask)) == is_embedded_sublattice(l, mask)
    b2 = builtin_family("boolean:2")
    corners = b2.mask_of(["{}", "{1,2}"])
    assert not on_variety(b2, point_from_mask(b2, corners))
    with pytest.raises(NotEmbedded):
        distinguished_point(b2, corners)

    # CLI export and re-ingest
    for d in FAMILIES:
        l = builtin_family(d)
        dot, spec = tmp_path / "l.dot", tmp_path / "l.json"
        assert main(["export-dot", "--family", d, "--out", str(dot)]) == 0
        assert main(["export-spec", "--family", d, "--out", str(spec)]) == 0
        assert lattice_isomorphism(l, read_dot(dot.read_text())) is not None
        assert lattice_isomorphism(l, load_document(json.loads(spec.read_text()))) is not None
    capsys.readouterr()
    assert time.perf_counter() - start < 60


def test_criterion_8_smoothness_baselines(lattices):
    for n in range(1, 7):
        assert singular_locus(builtin_family(f"chain:{n}")).is_smooth_variety
    non_chains = [l for l in lattices if not l.is_chain()]
    assert non_chains
    for l in non_chains:
        r = cotangent_report(l, make_face(l, 0))
        assert r.tangent_dim == len(l) > l.dim, l.name
        assert not r.smooth
