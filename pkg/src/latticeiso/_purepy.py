"""Pure-Python kernels. Reference semantics for ``_speedups.pyx``.

Both backends must return identical results, including the order in which
``enumerate_candidates`` emits sets.
"""

import numpy as np

BACKEND = "python"

# l-infinity distance <= 2 offsets, scanned in this order by both backends
REACH2 = tuple((dx, dy) for dy in range(-2, 3) for dx in range(-2, 3) if (dx, dy) != (0, 0))
STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def boundary_size(points):
    """Number of vertices outside ``points`` with an l1-neighbour inside."""
    pts = points if isinstance(points, (set, frozenset)) else set(map(tuple, points))
    seen = set()
    for x, y in pts:
        for dx, dy in STEPS:
            q = (x + dx, y + dy)
            if q not in pts:
                seen.add(q)
    return len(seen)


def enumerate_candidates(n):
    """Every size-``n`` set connected under l-infinity distance <= 2 adjacency,
    one per translation class, with its boundary size.

    The least vertex (by y, then x) of each set sits at the origin. Growth is
    Redelmeier's algorithm over the 24-cell neighbourhood.

    Returns ``(coords, bsizes)`` with shapes ``(m, n, 2)`` (int16) and ``(m,)``
    (int32); vertices of each set are listed in insertion order.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = []
    bsizes = []
    cur = []
    inset = set()
    seen = {(0, 0)}

    def allowed(c):
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    def grow(untried):
        untried = list(untried)
        while untried:
            c = untried.pop()
            cur.append(c)
            inset.add(c)
            if len(cur) == n:
                coords.append(list(cur))
                bsizes.append(boundary_size(inset))
            else:
                nxt = list(untried)
                fresh = []
                x, y = c
                for dx, dy in REACH2:
                    q = (x + dx, y + dy)
                    if q not in seen and allowed(q):
                        seen.add(q)
                        fresh.append(q)
                grow(nxt + fresh)
                for q in fresh:
                    seen.discard(q)
            cur.pop()
            inset.discard(c)

    grow([(0, 0)])
    out = np.array(coords, dtype=np.int16).reshape(len(coords), n, 2)
    return out, np.array(bsizes, dtype=np.int32)
