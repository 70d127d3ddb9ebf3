"""Toric data of the Hibi variety X_L.

Exponent vectors are integer tuples indexed by the join-irreducibles in
``l.irreducibles`` order: ``f_z`` spans the character lattice M and the
dual ``e_y`` spans N. Points are exact rationals, one per lattice element.
"""
from dataclasses import dataclass
from fractions import Fraction

from hibi.errors import InternalError, NotEmbedded, NotOnVariety
from hibi.lattice import as_mask, embedded_witness
from hibi.poset import bits


@dataclass(frozen=True)
class BinomialRelation:
    """x_a x_b - x_{a v b} x_{a ^ b} for the skew pair (a, b)."""

    skew: tuple
    main: tuple

    def evaluate(self, coords):
        a, b = self.skew
        j, m = self.main
        return coords[a] * coords[b] - coords[j] * coords[m]


@dataclass(frozen=True)
class ConeModel:
    rays: tuple
    semigroup_gens: tuple
    legend: tuple


@dataclass(frozen=True)
class VarietyPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def binomial_relations(l):
    return [BinomialRelation(d.skew, d.main) for d in l.diamonds()]


def semigroup_generators(l):
    """Indicator vector of the Birkhoff ideal of each element, element order."""
    out = []
    for x in range(len(l)):
        ideal = l.ideal_masks[x]
        out.append(tuple(int(ideal >> z & 1) for z in l.irreducibles))
    return out


def cone_generators(l):
    """Rays of sigma: e_z for z maximal in J, e_y' - e_y for covers y' < y of J."""
    d = l.dim
    jpos = l.j_index
    rays = []
    jmask = l.j_mask
    for z in l.irreducibles:
        if l.poset.up[z] & jmask == 1 << z:
            v = [0] * d
            v[jpos[z]] = 1
            rays.append(tuple(v))
    for y in l.irreducibles:
        below = l.poset.down[y] & jmask & ~(1 << y)
        for y2 in bits(below):
            between = below & l.poset.up[y2] & ~(1 << y2)
            if between:
                continue
            v = [0] * d
            v[jpos[y2]] += 1
            v[jpos[y]] -= 1
            rays.append(tuple(v))
    seen = set()
    unique = []
    for r in rays:
        if r not in seen:
            seen.add(r)
            unique.append(r)
    return unique


def cone_model(l):
    return ConeModel(
        rays=tuple(cone_generators(l)),
        semigroup_gens=tuple(semigroup_generators(l)),
        legend=tuple(l.irreducibles),
    )


def face_functional(l, subset):
    """u = sum of f_{I_a} over the subset; the face is sigma cut by u-perp."""
    mask = as_mask(l, subset)
    gens = semigroup_generators(l)
    u = [0] * l.dim
    for x in bits(mask):
        for k, c in enumerate(gens[x]):
            u[k] += c
    return tuple(u)


def point_from_mask(l, mask):
    return VarietyPoint(tuple(int(mask >> x & 1) for x in range(len(l))))


def distinguished_point(l, subset):
    """The 0/1 point supported on an embedded sublattice (or the origin)."""
    mask = as_mask(l, subset)
    bad = embedded_witness(l, mask)
    if bad is not None:
        kind, x, y = bad
        raise NotEmbedded(
            f"subset is not an embedded sublattice ({kind} witness "
            f"{l.elements[x]!r}, {l.elements[y]!r})",
            witness=(x, y),
        )
    return point_from_mask(l, mask)


def on_variety(l, p):
    coords = p.coords if isinstance(p, VarietyPoint) else tuple(Fraction(c) for c in p)
    if len(coords) != len(l):
        return False
    return all(rel.evaluate(coords) == 0 for rel in binomial_relations(l))


def support(l, p):
    """Mask of nonzero coordinates; always an embedded sublattice on X_L."""
    if not isinstance(p, VarietyPoint):
        p = VarietyPoint(p)
    if not on_variety(l, p):
        raise NotOnVariety("point does not satisfy the binomial relations")
    mask = 0
    for x, c in enumerate(p.coords):
        if c != 0:
            mask |= 1 << x
    if embedded_witness(l, mask) is not None:
        raise InternalError("support of a point of X_L is not an embedded sublattice",
                            witness=mask)
    return mask
