"""Finite posets over dense integer indices.

Element identifiers are opaque strings at the boundary; internally every
element is its position in ``Poset.elements``. The order relation is
kept as bit rows: bit ``y`` of ``up[x]`` is set iff ``x <= y``.
"""
from collections import deque

from hibi.errors import (
    CycleDetected,
    DuplicateElement,
    LimitExceeded,
    NotBounded,
    NotGraded,
    UnknownElement,
)


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset.

    Attributes:
        elements: tuple of identifiers, index i names element i.
        up: bit rows, ``up[x]`` has bit y set iff x <= y.
        down: bit rows, ``down[y]`` has bit x set iff x <= y.
        covers: sorted tuple of (lower, upper) index pairs.
    """

    __slots__ = ("elements", "index", "up", "down", "covers", "_upper_covers")

    def __init__(self, elements, up, down, covers):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.up = tuple(up)
        self.down = tuple(down)
        self.covers = tuple(covers)
        upper = [[] for _ in self.elements]
        for lo, hi in self.covers:
            upper[lo].append(hi)
        self._upper_covers = tuple(tuple(u) for u in upper)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def leq(self, x, y):
        return bool(self.up[x] >> y & 1)

    def comparable(self, x, y):
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def upper_covers(self, x):
        return self._upper_covers[x]

    def lower_covers(self, x):
        return tuple(lo for lo, hi in self.covers if hi == x)

    def minimal(self):
        return [x for x in range(len(self)) if self.down[x] == 1 << x]

    def maximal(self):
        return [x for x in range(len(self)) if self.up[x] == 1 << x]

    def bottom(self):
        mins = self.minimal()
        if len(mins) != 1:
            raise NotBounded(f"poset has {len(mins)} minimal elements")
        return mins[0]

    def top(self):
        maxs = self.maximal()
        if len(maxs) != 1:
            raise NotBounded(f"poset has {len(maxs)} maximal elements")
        return maxs[0]

    def relation_pairs(self):
        """All (x, y) with x <= y, in index order."""
        return [(x, y) for x in range(len(self)) for y in bits(self.up[x])]

    def names(self, indices):
        return [self.elements[i] for i in indices]

    def indices(self, names):
        out = []
        for name in names:
            if name not in self.index:
                raise UnknownElement(f"unknown element {name!r}", witness=name)
            out.append(self.index[name])
        return out

    def subposet_covers(self, mask):
        """Cover pairs of the order restricted to the elements of ``mask``."""
        out = []
        for x in bits(mask):
            above = self.up[x] & mask & ~(1 << x)
            for y in bits(above):
                between = above & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out


def _reduce(up, down):
    n = len(up)
    covers = []
    for x in range(n):
        above = up[x] & ~(1 << x)
        for y in bits(above):
            if not (above & down[y] & ~(1 << y)):
                covers.append((x, y))
    return covers


def poset_from_relation(elements, up):
    """Build a poset from already-closed bit rows ``up``."""
    n = len(up)
    down = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            down[y] |= 1 << x
    return Poset(elements, up, down, _reduce(up, down))


def poset_from_covers(elements, covers):
    """Poset whose order is the reflexive-transitive closure of ``covers``.

    Redundant input pairs are dropped; the stored covers are the
    transitive reduction.
    """
    elements = list(elements)
    index = {}
    for i, e in enumerate(elements):
        if e in index:
            raise DuplicateElement(f"duplicate element {e!r}", witness=e)
        index[e] = i
    n = len(elements)
    succ = [set() for _ in range(n)]
    for pair in covers:
        lo, hi = pair
        for e in (lo, hi):
            if e not in index:
                raise UnknownElement(f"cover references unknown element {e!r}", witness=e)
        if lo == hi:
            raise CycleDetected(f"self-loop on {lo!r}", witness=(lo, hi))
        succ[index[lo]].add(index[hi])

    indeg = [0] * n
    for x in range(n):
        for y in succ[x]:
            indeg[y] += 1
    queue = deque(x for x in range(n) if indeg[x] == 0)
    topo = []
    while queue:
        x = queue.popleft()
        topo.append(x)
        for y in sorted(succ[x]):
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(topo) != n:
        stuck = [elements[x] for x in range(n) if indeg[x] > 0]
        raise CycleDetected(f"covers contain a cycle through {stuck}", witness=stuck)

    up = [1 << x for x in range(n)]
    for x in reversed(topo):
        for y in succ[x]:
            up[x] |= up[y]
    return poset_from_relation(elements, up)


def level(p, x):
    """Length of the saturated chains from the minimum up to ``x``."""
    bot = p.bottom()
    if not p.leq(bot, x):
        raise NotBounded("minimum is not below x")
    shortest = {bot: 0}
    longest = {bot: 0}
    # walk the interval [bot, x] in an order compatible with <=
    interval = p.up[bot] & p.down[x]
    order = sorted(bits(interval), key=lambda e: bin(p.down[e]).count("1"))
    for e in order:
        if e == bot:
            continue
        below = [lo for lo in p.lower_covers(e) if interval >> lo & 1]
        shortest[e] = 1 + min(shortest[lo] for lo in below)
        longest[e] = 1 + max(longest[lo] for lo in below)
    if shortest[x] != longest[x]:
        raise NotGraded(
            f"chains to {p.elements[x]!r} have lengths {shortest[x]}..{longest[x]}",
            witness=p.elements[x],
        )
    return longest[x]


def maximal_chains(p, cap=None, mask=None):
    """Saturated chains from the minimum to the maximum, lexicographic.

    With ``mask`` the search runs inside the subposet on those elements.
    """
    if mask is None:
        bot, top = p.bottom(), p.top()
        upper = [list(p.upper_covers(x)) for x in range(len(p))]
    else:
        if not mask:
            return [[]]
        upper = [[] for _ in range(len(p))]
        for lo, hi in p.subposet_covers(mask):
            upper[lo].append(hi)
        mins = [x for x in bits(mask) if not (p.down[x] & mask & ~(1 << x))]
        maxs = [x for x in bits(mask) if not (p.up[x] & mask & ~(1 << x))]
        if len(mins) != 1 or len(maxs) != 1:
            raise NotBounded("subposet is not bounded")
        bot, top = mins[0], maxs[0]
    for u in upper:
        u.sort()

    chains = []
    path = [bot]

    def walk(x):
        if x == top:
            chains.append(list(path))
            if cap is not None and len(chains) > cap:
                raise LimitExceeded(f"more than {cap} maximal chains")
            return
        for y in upper[x]:
            path.append(y)
            walk(y)
            path.pop()

    walk(bot)
    return chains


def order_ideals(p, cap=None):
    """All down-closed subsets as bitmasks, ordered by size then members."""
    n = len(p)
    # a linear extension: sort by number of elements below
    order = sorted(range(n), key=lambda e: (bin(p.down[e]).count("1"), e))
    below = [p.down[e] & ~(1 << e) for e in range(n)]
    found = []

    def grow(k, ideal):
        if k == n:
            found.append(ideal)
            if cap is not None and len(found) > cap:
                raise LimitExceeded(f"more than {cap} order ideals")
            return
        e = order[k]
        grow(k + 1, ideal)
        if ideal & below[e] == below[e]:
            grow(k + 1, ideal | 1 << e)

    grow(0, 0)
    found.sort(key=lambda m: (bin(m).count("1"), list(bits(m))))
    return found



