"""The Wang-Wang nested sequence of minimal sets and its boundary table.

Vertex order: the origin, then layer by layer. Once the l1-ball of radius n
is complete, the next 4n + 4 vertices are four diagonal segments of n + 1
vertices each. The first runs from (1, n) to (n + 1, 0), moving clockwise
around the origin; the other three are its images under successive clockwise
quarter turns, traversed in rotated order. Each segment then starts next to
where the previous one ended, which keeps every prefix minimal.
"""

import threading
from itertools import islice

from .errors import InvalidSizeError, NoSuchBoundaryError
from .lattice import Vertex, VertexSet, add_delta


def ww_order():
    """Infinite generator of the Wang-Wang vertex order."""
    yield (0, 0)
    n = 0
    while True:
        segment = [(1 + i, n - i) for i in range(n + 1)]
        for _ in range(4):
            yield from segment
            segment = [(y, -x) for x, y in segment]
        n += 1


def ball_size(n: int) -> int:
    return 2 * n * n + 2 * n + 1


def ball(n: int) -> VertexSet:
    if n < 0:
        raise InvalidSizeError("radius must be >= 0")
    return frozenset((x, y) for x in range(-n, n + 1) for y in range(-(n - abs(x)), n - abs(x) + 1))


class WWTable:
    """Lazily grown table of Wang-Wang prefixes and their boundary sizes.

    Growth happens under a lock, so every entry is computed once and all
    readers see the same values.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._gen = ww_order()
        self._order: list[Vertex] = []
        self._members: set[Vertex] = set()
        self._bsizes: list[int] = []
        self._first: dict[int, int] = {}

    def _grow_to(self, n: int) -> None:
        if len(self._bsizes) >= n:
            return
        with self._lock:
            while len(self._bsizes) < n:
                v = next(self._gen)
                prev = self._bsizes[-1] if self._bsizes else 0
                b = prev + add_delta(self._members, v)
                self._members.add(v)
                self._order.append(v)
                self._bsizes.append(b)
                self._first.setdefault(b, len(self._bsizes))

    def vertices(self, n: int) -> list[Vertex]:
        self._grow_to(n)
        return self._order[:n]

    def boundary(self, n: int) -> int:
        self._grow_to(n)
        return self._bsizes[n - 1]

    def boundaries(self, n: int) -> list[int]:
        """``[|bdry WW_1|, ..., |bdry WW_n|]``."""
        self._grow_to(n)
        return self._bsizes[:n]

    def min_size_for_boundary(self, b: int) -> int:
        if b < 4 or b == 5:
            raise NoSuchBoundaryError(f"no minimal set has boundary size {b}")
        n = max(len(self._bsizes), 1)
        # boundaries grow by at most one per step from n = 2 on, so growing
        # until the table passes b is enough to find the first hit
        while self.boundary(n) < b:
            n = 2 * n
        return self._first[b]


TABLE = WWTable()


def _check(n: int) -> None:
    if n < 1:
        raise InvalidSizeError("n must be >= 1")


def ww(n: int) -> VertexSet:
    """The first ``n`` vertices of the Wang-Wang order."""
    _check(n)
    return frozenset(TABLE.vertices(n))


def ww_vertices(n: int) -> list[Vertex]:
    """Like ``ww`` but as the ordered list ``[x_1, ..., x_n]``."""
    _check(n)
    return TABLE.vertices(n)


def ww_boundary(n: int) -> int:
    _check(n)
    return TABLE.boundary(n)


def min_size_for_boundary(b: int) -> int:
    """Smallest ``n`` with ``ww_boundary(n) == b``.

    That is the size of the smallest minimal set whose boundary has ``b``
    vertices. Raises ``NoSuchBoundaryError`` for ``b < 4`` or ``b == 5``.
    """
    return TABLE.min_size_for_boundary(b)


def first_vertices(count: int) -> list[Vertex]:
    return list(islice(ww_order(), count))
