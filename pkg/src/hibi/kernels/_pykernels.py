"""Pure-Python implementations of the hot kernels.

Bitsets are Python ints, so there is no size limit. The compiled module
``_ckernels`` mirrors these signatures exactly.
"""
from hibi.errors import LimitExceeded


def lub_table(up):
    """Flat n*n table of least upper bounds, -1 where none exists.

    ``up[x]`` is the bitmask of elements >= x. Pass the down-masks instead
    to get greatest lower bounds.
    """
    n = len(up)
    out = [-1] * (n * n)
    for x in range(n):
        for y in range(x, n):
            ub = up[x] & up[y]
            rest = ub
            while rest:
                low = rest & -rest
                z = low.bit_length() - 1
                if up[z] & ub == ub:
                    out[x * n + y] = out[y * n + x] = z
                    break
                rest ^= low
    return out


def distributive_witness(join, meet, n):
    """Return (x, y, z, law) for the first failing identity, else None.

    law 1: x^(y v z) == (x^y) v (x^z);  law 2: x v (y^z) == (x v y)^(x v z).
    """
    for x in range(n):
        xr = x * n
        for y in range(n):
            xy_m = meet[xr + y]
            xy_j = join[xr + y]
            yr = y * n
            for z in range(n):
                if meet[xr + join[yr + z]] != join[xy_m * n + meet[xr + z]]:
                    return (x, y, z, 1)
                if join[xr + meet[yr + z]] != meet[xy_j * n + join[xr + z]]:
                    return (x, y, z, 2)
    return None


def embedded_closure(mask, a, b, j, m):
    """Smallest embedded sublattice containing ``mask``.

    One rule pair per diamond: skew diagonal present => main diagonal
    present, and conversely.
    """
    nd = len(a)
    skew = [(1 << a[k]) | (1 << b[k]) for k in range(nd)]
    main = [(1 << j[k]) | (1 << m[k]) for k in range(nd)]
    changed = True
    while changed:
        changed = False
        for k in range(nd):
            s = skew[k]
            t = main[k]
            hs = mask & s == s
            ht = mask & t == t
            if hs != ht:
                mask |= s | t
                changed = True
    return mask


def enumerate_embedded(n, a, b, j, m, cap=None):
    """All embedded sublattices as bitmasks, in lectic (next-closure) order."""
    nd = len(a)
    skew = [(1 << a[k]) | (1 << b[k]) for k in range(nd)]
    main = [(1 << j[k]) | (1 << m[k]) for k in range(nd)]

    def close(mask):
        changed = True
        while changed:
            changed = False
            for k in range(nd):
                s = skew[k]
                t = main[k]
                if (mask & s == s) != (mask & t == t):
                    mask |= s | t
                    changed = True
        return mask

    full = (1 << n) - 1
    current = close(0)
    out = [current]
    while current != full:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                current ^= bit
                continue
            cand = close(current | bit)
            if (cand ^ current) & (bit - 1) == 0:
                current = cand
                break
        out.append(current)
        if cap is not None and len(out) > cap:
            raise LimitExceeded(f"more than {cap} embedded sublattices")
    return out


def int_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    nrows = len(mat)
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and mat[piv][c] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != rank:
            mat[piv], mat[rank] = mat[rank], mat[piv]
        prow = mat[rank]
        p = prow[c]
        for r in range(rank + 1, nrows):
            row = mat[r]
            f = row[c]
            for k in range(c + 1, ncols):
                row[k] = (p * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank
