"""Cotangent space of X_L at the distinguished point of a face.

For a face with embedded sublattice D and a maximal chain Gamma of D, the
cotangent space has a basis indexed by Gamma together with one
representative of every class in G, where

* Lambda is the set of elements comparable with every member of Gamma,
* E holds the outside elements that are diagonal partners of the single
  D-vertex of some diamond meeting D in exactly that vertex,
* two outside elements are equivalent when they form a side of a diamond
  whose opposite side lies in D (transitively closed),
* G is the set of classes meeting (Lambda - E) - Gamma and avoiding E.
"""
from dataclasses import dataclass

from hibi.errors import GammaNotMaximalChain, InternalError
from hibi.faces import Face, make_face
from hibi.lattice import as_mask
from hibi.poset import bits


class DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index becomes the root so classes are keyed by their minimum
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in groups.values())


@dataclass(frozen=True)
class CotangentReport:
    face: Face
    gamma: tuple
    lambda_set: frozenset
    e_set: frozenset
    classes: tuple
    g_classes: tuple
    basis_labels: tuple
    tangent_dim: int
    smooth: bool

    @property
    def z_set(self):
        return self.lambda_set - self.e_set - set(self.gamma)

    @property
    def representatives(self):
        return tuple(c[0] for c in self.g_classes)


def _face(l, D):
    return D if isinstance(D, Face) else make_face(l, as_mask(l, D))


def first_maximal_chain(l, mask):
    """Lexicographically first saturated chain of the subposet ``mask``."""
    if not mask:
        return ()
    lo = next(x for x in bits(mask) if not (l.poset.down[x] & mask & ~(1 << x)))
    chain = [lo]
    x = lo
    while True:
        above = l.poset.up[x] & mask & ~(1 << x)
        if not above:
            return tuple(chain)
        # the smallest-index cover of x inside the subset
        for y in bits(above):
            if not (above & l.poset.down[y] & ~(1 << y)):
                chain.append(y)
                x = y
                break


def check_gamma(l, mask, gamma):
    gamma = tuple(gamma)
    if not mask:
        if gamma:
            raise GammaNotMaximalChain("the empty face only admits the empty chain")
        return gamma
    if not gamma:
        raise GammaNotMaximalChain("empty chain in a nonempty face")
    gmask = 0
    for g in gamma:
        if not mask >> g & 1:
            raise GammaNotMaximalChain(f"{l.elements[g]!r} is not in the face", witness=g)
        gmask |= 1 << g
    ordered = sorted(gamma, key=lambda x: bin(l.poset.down[x]).count("1"))
    for x, y in zip(ordered, ordered[1:]):
        if not l.leq(x, y) or x == y:
            raise GammaNotMaximalChain("elements are not a chain", witness=(x, y))
        between = mask & l.poset.up[x] & l.poset.down[y] & ~(1 << x) & ~(1 << y)
        if between:
            raise GammaNotMaximalChain("chain is not saturated in the face", witness=(x, y))
    lo, hi = ordered[0], ordered[-1]
    if mask & l.poset.down[lo] != 1 << lo or mask & l.poset.up[hi] != 1 << hi:
        raise GammaNotMaximalChain("chain does not run from the bottom to the top of the face")
    return tuple(ordered)


def lambda_mask(l, gamma):
    mask = l.full_mask
    for g in gamma:
        mask &= l.poset.up[g] | l.poset.down[g]
    return mask


def lambda_set(l, D, gamma):
    """Elements comparable with every member of ``gamma``."""
    face = _face(l, D)
    gamma = check_gamma(l, face.mask, gamma)
    return frozenset(bits(lambda_mask(l, gamma)))


def e_mask(l, mask):
    out = 0
    for d in l.diamonds():
        inside = [v for v in d.vertices if mask >> v & 1]
        if len(inside) != 1:
            continue
        beta = inside[0]
        a, b = d.skew
        partner = {a: b, b: a, d.join: d.meet, d.meet: d.join}[beta]
        out |= 1 << partner
    return out


def e_set(l, D):
    face = _face(l, D)
    return frozenset(bits(e_mask(l, face.mask)))


def class_partition(l, mask):
    outside = [x for x in range(len(l)) if not mask >> x & 1]
    ds = DisjointSet(outside)
    for d in l.diamonds():
        for side, opposite in d.sides():
            if all(mask >> v & 1 for v in opposite) and not any(mask >> v & 1 for v in side):
                ds.union(*side)
    return ds.classes()


def equivalence_classes(l, D):
    """Partition of the elements outside D, as sorted tuples."""
    face = _face(l, D)
    return class_partition(l, face.mask)


def cotangent_parts(l, mask, gamma=None):
    """Plain-data core of :func:`cotangent_report` (picklable)."""
    if gamma is None:
        gamma = first_maximal_chain(l, mask)
    gamma = check_gamma(l, mask, gamma)
    lam = lambda_mask(l, gamma)
    emask = e_mask(l, mask)
    classes = class_partition(l, mask)
    gmask = 0
    for g in gamma:
        gmask |= 1 << g
    zmask = lam & ~emask & ~gmask
    if zmask & mask:
        raise InternalError("Lambda meets the face outside the chain", witness=zmask & mask)
    g_classes = []
    for cls in classes:
        cmask = 0
        for x in cls:
            cmask |= 1 << x
        if cmask & zmask and not cmask & emask:
            g_classes.append(cls)
    return gamma, lam, emask, tuple(classes), tuple(g_classes)


def cotangent_report(l, D, gamma=None):
    face = _face(l, D)
    gamma, lam, emask, classes, g_classes = cotangent_parts(l, face.mask, gamma)
    return build_report(l, face, gamma, lam, emask, classes, g_classes)


def build_report(l, face, gamma, lam, emask, classes, g_classes):
    labels = tuple(("chain", g) for g in gamma) + tuple(("class", c[0]) for c in g_classes)
    tangent = len(g_classes) + len(gamma)
    return CotangentReport(
        face=face,
        gamma=tuple(gamma),
        lambda_set=frozenset(bits(lam)),
        e_set=frozenset(bits(emask)),
        classes=classes,
        g_classes=g_classes,
        basis_labels=labels,
        tangent_dim=tangent,
        smooth=tangent == l.dim,
    )
