"""Faces of the cone sigma, represented by embedded sublattices.

A face is keyed by its embedded sublattice D (a bitmask over the lattice
elements). The empty set is the face sigma itself and D = L is the zero
face; the torus orbit of a face has closure X_D.
"""
from hibi import kernels
from hibi.errors import LatticeMismatch, LimitExceeded, NotEmbedded
from hibi.lattice import as_mask, embedded_violations, embedded_witness
from hibi.poset import bits
from hibi.toric import point_from_mask


class Face:
    __slots__ = ("lattice", "mask", "orbit_dim", "cone_dim")

    def __init__(self, lattice, mask):
        self.lattice = lattice
        self.mask = mask
        self.orbit_dim = chain_cardinality(lattice, mask)
        self.cone_dim = lattice.dim - self.orbit_dim

    @property
    def D(self):
        return frozenset(bits(self.mask))

    @property
    def point(self):
        return point_from_mask(self.lattice, self.mask)

    def names(self):
        return self.lattice.names_of(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __eq__(self, other):
        if not isinstance(other, Face):
            return NotImplemented
        return self.lattice is other.lattice and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"Face({self.names()})"


def chain_cardinality(l, mask):
    """Number of elements in a longest chain inside ``mask`` (0 when empty)."""
    longest = {}
    order = sorted(bits(mask), key=lambda x: bin(l.poset.down[x]).count("1"))
    best = 0
    for x in order:
        below = l.poset.down[x] & mask & ~(1 << x)
        longest[x] = 1 + max((longest[y] for y in bits(below)), default=0)
        best = max(best, longest[x])
    return best


def is_embedded_sublattice(l, subset):
    return embedded_witness(l, as_mask(l, subset)) is None


def make_face(l, subset):
    mask = as_mask(l, subset)
    bad = embedded_witness(l, mask)
    if bad is not None:
        kind, x, y = bad
        raise NotEmbedded(
            f"not an embedded sublattice: {kind} witness "
            f"({l.elements[x]!r}, {l.elements[y]!r})",
            witness=(l.elements[x], l.elements[y]),
        )
    return Face(l, mask)


def _rule_arrays(l):
    ds = l.diamonds()
    return (
        [d.skew[0] for d in ds],
        [d.skew[1] for d in ds],
        [d.join for d in ds],
        [d.meet for d in ds],
    )


def _canonical(mask):
    return (bin(mask).count("1"), list(bits(mask)))


def embedded_masks(l, cap=None):
    a, b, j, m = _rule_arrays(l)
    masks = kernels.enumerate_embedded(len(l), a, b, j, m, cap)
    return sorted(masks, key=_canonical)


def enumerate_faces(l, cap=None):
    """Every embedded sublattice of ``l`` (including the empty set and L).

    Next-closure enumeration under the closure operator "add the main
    diagonal of any diamond whose skew diagonal is present, and vice
    versa"; its closed sets are exactly the embedded sublattices. Sorted
    by size, then members.
    """
    return [Face(l, m) for m in embedded_masks(l, cap)]


def embedded_hull(l, subset):
    """Smallest embedded sublattice containing ``subset``."""
    a, b, j, m = _rule_arrays(l)
    return kernels.embedded_closure(as_mask(l, subset), a, b, j, m)


def brute_force_faces(l, limit=16):
    """Scan all 2^#L subsets with the definition; test oracle only."""
    n = len(l)
    if n > limit:
        raise LimitExceeded(f"brute-force scan refused for {n} > {limit} elements")
    found = [mask for mask in range(1 << n) if not embedded_violations(l, mask)]
    return sorted(found, key=_canonical)


def closure_contains(f, g):
    """True iff the orbit of ``g`` lies in the closure of the orbit of ``f``."""
    if f.lattice is not g.lattice:
        raise LatticeMismatch("faces belong to different lattices")
    return g.mask & f.mask == g.mask
