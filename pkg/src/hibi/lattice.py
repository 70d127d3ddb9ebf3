"""Finite distributive lattices, Birkhoff ideals, diamonds and families.

Join-irreducibles follow the convention that the minimum counts as one:
``z = x v y`` forces ``z in {x, y}``, which the minimum satisfies. With
that convention ``len(J)`` equals the cardinality of every maximal chain
and the dimension of the associated toric variety. The Birkhoff poset
(nonzero join-irreducibles) is ``J`` minus the minimum.
"""
import itertools
import math
import re
from dataclasses import dataclass

from hibi import kernels
from hibi.errors import (
    BadDescriptor,
    LimitExceeded,
    NotACover,
    NotALattice,
    NotDistributive,
)
from hibi.poset import bits, order_ideals, poset_from_covers, poset_from_relation

MAX_FAMILY_ELEMENTS = 512


@dataclass(frozen=True)
class Diamond:
    """A non-comparable pair with its join and meet (``skew[0] < skew[1]``)."""

    skew: tuple
    join: int
    meet: int

    @property
    def main(self):
        return (self.join, self.meet)

    @property
    def vertices(self):
        return (self.skew[0], self.skew[1], self.join, self.meet)

    def sides(self):
        """The four sides as (pair, opposite pair)."""
        a, b = self.skew
        j, m = self.join, self.meet
        return (
            ((a, j), (b, m)),
            ((b, m), (a, j)),
            ((b, j), (a, m)),
            ((a, m), (b, j)),
        )


class DistributiveLattice:
    """A finite distributive lattice with cached join/meet tables."""

    def __init__(self, poset, join, meet, name=None):
        self.poset = poset
        self.name = name
        self._join = join
        self._meet = meet
        n = len(poset)
        self.bottom = poset.bottom()
        self.top = poset.top()
        self.irreducibles = tuple(x for x in range(n) if len(poset.lower_covers(x)) <= 1)
        self.j_index = {z: k for k, z in enumerate(self.irreducibles)}
        jmask = 0
        for z in self.irreducibles:
            jmask |= 1 << z
        self.j_mask = jmask
        self.ideal_masks = tuple(poset.down[x] & jmask for x in range(n))
        self._diamonds = None

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"DistributiveLattice({label}{len(self)} elements, #J={self.dim})"

    @property
    def elements(self):
        return self.poset.elements

    @property
    def dim(self):
        return len(self.irreducibles)

    @property
    def full_mask(self):
        return (1 << len(self)) - 1

    def join(self, x, y):
        return self._join[x * len(self) + y]

    def meet(self, x, y):
        return self._meet[x * len(self) + y]

    def leq(self, x, y):
        return self.poset.leq(x, y)

    def comparable(self, x, y):
        return self.poset.comparable(x, y)

    def ideal(self, x):
        """Birkhoff ideal: the join-irreducibles below ``x``."""
        return frozenset(bits(self.ideal_masks[x]))

    def is_chain(self):
        return not self.diamonds()

    def diamonds(self):
        if self._diamonds is None:
            self._diamonds = diamonds(self)
        return self._diamonds

    def irreducible_poset(self):
        """The poset of nonzero join-irreducibles, named as in the lattice."""
        members = [z for z in self.irreducibles if z != self.bottom]
        up = []
        for z in members:
            row = 0
            for k, w in enumerate(members):
                if self.leq(z, w):
                    row |= 1 << k
            up.append(row)
        return poset_from_relation([self.elements[z] for z in members], up)

    def mask_of(self, names):
        mask = 0
        for i in self.poset.indices(names):
            mask |= 1 << i
        return mask

    def names_of(self, mask):
        return [self.elements[i] for i in bits(mask)]


def lattice_from_poset(p, name=None):
    """Validate that ``p`` is a distributive lattice and build its tables."""
    n = len(p)
    if n == 0:
        raise NotALattice("the empty poset is not a lattice")
    join = kernels.lub_table(list(p.up))
    meet = kernels.lub_table(list(p.down))
    for table, what in ((join, "least upper bound"), (meet, "greatest lower bound")):
        if -1 in table:
            k = table.index(-1)
            x, y = divmod(k, n)
            pair = (p.elements[x], p.elements[y])
            raise NotALattice(f"{pair[0]!r} and {pair[1]!r} have no {what}", witness=pair)
    bad = kernels.distributive_witness(join, meet, n)
    if bad is not None:
        x, y, z, law = bad
        triple = tuple(p.elements[i] for i in (x, y, z))
        identity = "x^(yvz) = (x^y)v(x^z)" if law == 1 else "xv(y^z) = (xvy)^(xvz)"
        raise NotDistributive(
            f"distributive law {identity} fails at x,y,z = {triple}", witness=triple
        )
    return DistributiveLattice(p, join, meet, name=name)


def _ideal_label(p, ideal):
    tops = [x for x in bits(ideal) if not (p.up[x] & ideal & ~(1 << x))]
    return "{" + ",".join(p.elements[x] for x in tops) + "}"


def lattice_from_irreducibles(p, cap=None, name=None):
    """Lattice of order ideals of ``p`` under union and intersection.

    Elements are labelled by the maximal members of each ideal, so the
    principal ideal of ``x`` is ``"{x}"`` and the empty ideal is ``"{}"``.
    """
    ideals = order_ideals(p, cap=cap)
    pos = {m: k for k, m in enumerate(ideals)}
    n = len(ideals)
    up = []
    for a in ideals:
        row = 0
        for k, b in enumerate(ideals):
            if a & b == a:
                row |= 1 << k
        up.append(row)
    labels = [_ideal_label(p, m) for m in ideals]
    poset = poset_from_relation(labels, up)
    join = [0] * (n * n)
    meet = [0] * (n * n)
    for i, a in enumerate(ideals):
        for k, b in enumerate(ideals):
            join[i * n + k] = pos[a | b]
            meet[i * n + k] = pos[a & b]
    return DistributiveLattice(poset, join, meet, name=name)


def diamonds(l):
    """One diamond per unordered non-comparable pair, in index order."""
    out = []
    n = len(l)
    for a in range(n):
        for b in range(a + 1, n):
            if not l.comparable(a, b):
                out.append(Diamond((a, b), l.join(a, b), l.meet(a, b)))
    return out


def cover_irreducible(l, cover):
    """The join-irreducible added along the cover ``(upper, lower)``."""
    upper, lower = cover
    if (lower, upper) not in set(l.poset.covers):
        raise NotACover(
            f"({l.elements[upper]!r}, {l.elements[lower]!r}) is not a cover",
            witness=(upper, lower),
        )
    diff = l.ideal_masks[upper] & ~l.ideal_masks[lower]
    found = list(bits(diff))
    if len(found) != 1:
        raise NotDistributive("cover does not add exactly one irreducible", witness=cover)
    return found[0]


def lattice_isomorphism(l1, l2):
    """A join/meet preserving bijection ``l1 -> l2`` as a list, or None.

    Searches isomorphisms of the irreducible posets and extends them to
    the Birkhoff ideals.
    """
    if len(l1) != len(l2) or l1.dim != l2.dim:
        return None
    j1 = l1.irreducibles
    j2 = l2.irreducibles
    key1 = [(bin(l1.poset.down[z] & l1.j_mask).count("1"), bin(l1.poset.up[z] & l1.j_mask).count("1")) for z in j1]
    key2 = [(bin(l2.poset.down[z] & l2.j_mask).count("1"), bin(l2.poset.up[z] & l2.j_mask).count("1")) for z in j2]
    if sorted(key1) != sorted(key2):
        return None
    assign = {}
    used = set()

    def consistent(a, b):
        for x, y in assign.items():
            if l1.leq(x, a) != l2.leq(y, b) or l1.leq(a, x) != l2.leq(b, y):
                return False
        return True

    def search(k):
        if k == len(j1):
            return True
        a = j1[k]
        for idx, b in enumerate(j2):
            if b in used or key1[k] != key2[idx] or not consistent(a, b):
                continue
            assign[a] = b
            used.add(b)
            if search(k + 1):
                return True
            del assign[a]
            used.discard(b)
        return False

    if not search(0):
        return None
    by_ideal = {}
    for y in range(len(l2)):
        by_ideal[l2.ideal_masks[y]] = y
    mapping = []
    for x in range(len(l1)):
        image = 0
        for z in bits(l1.ideal_masks[x]):
            image |= 1 << assign[z]
        if image not in by_ideal:
            return None
        mapping.append(by_ideal[image])
    return mapping


_FAMILY = re.compile(
    r"^\s*(?:(chain|boolean):(\d+)|grid:(\d+)[xX](\d+)|subsets:(\d+),(\d+))\s*$"
)


def _product_order(points, name, label):
    pts = list(points)
    if len(pts) > MAX_FAMILY_ELEMENTS:
        raise LimitExceeded(f"{name} has {len(pts)} elements (limit {MAX_FAMILY_ELEMENTS})")
    where = {q: k for k, q in enumerate(pts)}
    covers = []
    for q in pts:
        for i in range(len(q)):
            r = q[:i] + (q[i] + 1,) + q[i + 1:]
            if r in where:
                covers.append((label(q), label(r)))
    poset = poset_from_covers([label(q) for q in pts], covers)
    return lattice_from_poset(poset, name=name)


def builtin_family(descriptor):
    """``chain:n``, ``boolean:n``, ``grid:AxB`` or ``subsets:d,n``."""
    match = _FAMILY.match(descriptor)
    if not match:
        raise BadDescriptor(f"unrecognised family descriptor {descriptor!r}", witness=descriptor)
    kind, size, ga, gb, sd, sn = match.groups()
    name = descriptor.strip()
    if kind == "chain":
        n = int(size)
        if n < 1:
            raise BadDescriptor("chain:n needs n >= 1", witness=descriptor)
        if n > MAX_FAMILY_ELEMENTS:
            raise LimitExceeded(f"{name} exceeds {MAX_FAMILY_ELEMENTS} elements")
        return _product_order(((k,) for k in range(n)), name, lambda q: str(q[0]))
    if kind == "boolean":
        n = int(size)
        if 2 ** n > MAX_FAMILY_ELEMENTS:
            raise LimitExceeded(f"{name} has 2^{n} elements (limit {MAX_FAMILY_ELEMENTS})")
        subsets = sorted(
            (s for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)),
            key=lambda s: (len(s), s),
        )
        labels = {s: "{" + ",".join(map(str, s)) + "}" for s in subsets}
        covers = [
            (labels[s], labels[t])
            for s in subsets
            for t in subsets
            if len(t) == len(s) + 1 and set(s) <= set(t)
        ]
        return lattice_from_poset(poset_from_covers([labels[s] for s in subsets], covers), name=name)
    if ga is not None:
        a, b = int(ga), int(gb)
        if a < 1 or b < 1:
            raise BadDescriptor("grid:AxB needs A, B >= 1", witness=descriptor)
        if a * b > MAX_FAMILY_ELEMENTS:
            raise LimitExceeded(f"{name} exceeds {MAX_FAMILY_ELEMENTS} elements")
        pts = itertools.product(range(1, a + 1), range(1, b + 1))
        return _product_order(pts, name, lambda q: f"({q[0]},{q[1]})")
    d, n = int(sd), int(sn)
    if not 1 <= d <= n:
        raise BadDescriptor("subsets:d,n needs 1 <= d <= n", witness=descriptor)
    if math.comb(n, d) > MAX_FAMILY_ELEMENTS:
        raise LimitExceeded(f"{name} exceeds {MAX_FAMILY_ELEMENTS} elements")
    pts = list(itertools.combinations(range(1, n + 1), d))
    sep = "" if n <= 9 else ","
    return _product_order(pts, name, lambda q: sep.join(map(str, q)))


def as_mask(l, subset):
    """Bitmask for a subset given as a mask, a Face, or element indices."""
    if isinstance(subset, int):
        mask = subset
    elif hasattr(subset, "mask"):
        mask = subset.mask
    else:
        mask = 0
        for i in subset:
            mask |= 1 << i
    if mask >> len(l):
        raise BadDescriptor("subset references indices outside the lattice")
    return mask


def embedded_violations(l, subset):
    """Every way ``subset`` fails to be an embedded sublattice.

    Returns (kind, x, y) triples: kind "join"/"meet" for a missing
    join/meet of x, y in the subset; kind "embedded" for a
    non-comparable pair outside the subset whose join and meet lie inside.
    """
    mask = as_mask(l, subset)
    out = []
    members = list(bits(mask))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if not mask >> l.join(x, y) & 1:
                out.append(("join", x, y))
            if not mask >> l.meet(x, y) & 1:
                out.append(("meet", x, y))
    for d in l.diamonds():
        a, b = d.skew
        if mask >> d.join & 1 and mask >> d.meet & 1 and not (mask >> a & 1 and mask >> b & 1):
            out.append(("embedded", a, b))
    return out


def embedded_witness(l, mask):
    """First violation from :func:`embedded_violations`, or None."""
    found = embedded_violations(l, mask)
    return found[0] if found else None
