"""Vertices and finite vertex sets of the planar integer lattice.

A vertex is an ``(x, y)`` tuple of ints; a vertex set is a ``frozenset`` of
them. Edges join vertices at l1-distance one.
"""

from collections.abc import Iterable

from . import kernels
from .errors import CoordinateRangeError, EmptySetError

Vertex = tuple[int, int]
VertexSet = frozenset[Vertex]

COORD_LIMIT = 1 << 30

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))
KING_STEPS = tuple((dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0))


def vertex_set(points: Iterable) -> VertexSet:
    """Coerce ``points`` to a frozenset of int pairs, rejecting huge coordinates."""
    if isinstance(points, frozenset):
        out = points
    else:
        out = frozenset((int(p[0]), int(p[1])) for p in points)
    for x, y in out:
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise CoordinateRangeError(f"coordinate of {(x, y)} exceeds 2**30 in magnitude")
    return out


def require_nonempty(A: VertexSet) -> None:
    if not A:
        raise EmptySetError("operation requires a nonempty vertex set")


def neighbors(v: Vertex) -> list[Vertex]:
    x, y = v
    return [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]


def boundary(A: Iterable) -> VertexSet:
    """Vertices outside ``A`` with at least one l1-neighbour in ``A``."""
    A = vertex_set(A)
    out = set()
    for x, y in A:
        for dx, dy in STEPS:
            q = (x + dx, y + dy)
            if q not in A:
                out.add(q)
    return frozenset(out)


def boundary_size(A: Iterable) -> int:
    return kernels.boundary_size(vertex_set(A))


def closed_neighborhood(A: Iterable) -> VertexSet:
    A = vertex_set(A)
    return A | boundary(A)


def within_two(A: VertexSet) -> VertexSet:
    """Vertices not in ``A`` at l1-distance one or two from it.

    Any vertex farther away adds four fresh boundary vertices when joined to
    ``A``, so this is the only region where single-vertex additions can keep the
    boundary from growing by 4.
    """
    first = boundary(A)
    return first | boundary(A | first)


def add_delta(A: VertexSet, v: Vertex) -> int:
    """``|boundary(A + v)| - |boundary(A)|`` for ``v`` not in ``A``, computed locally."""
    x, y = v
    delta = 0
    touching = False
    for dx, dy in STEPS:
        w = (x + dx, y + dy)
        if w in A:
            touching = True
            continue
        # w joins the boundary unless some other vertex of A already reaches it
        wx, wy = w
        if not any((wx + ex, wy + ey) in A for ex, ey in STEPS):
            delta += 1
    if touching:
        delta -= 1
    return delta


def remove_delta(A: VertexSet, v: Vertex) -> int:
    """``|boundary(A - v)| - |boundary(A)|`` for ``v`` in ``A``, computed locally."""
    x, y = v
    delta = 0
    touching = False
    for dx, dy in STEPS:
        w = (x + dx, y + dy)
        if w in A:
            touching = True
            continue
        wx, wy = w
        if not any((wx + ex, wy + ey) in A and (wx + ex, wy + ey) != v for ex, ey in STEPS):
            delta -= 1
    if touching:
        delta += 1
    return delta


def _components(A: VertexSet, steps) -> list[VertexSet]:
    remaining = set(A)
    comps = []
    while remaining:
        start = min(remaining, key=lambda p: (p[1], p[0]))
        remaining.discard(start)
        stack = [start]
        comp = {start}
        while stack:
            x, y = stack.pop()
            for dx, dy in steps:
                q = (x + dx, y + dy)
                if q in remaining:
                    remaining.discard(q)
                    comp.add(q)
                    stack.append(q)
        comps.append(frozenset(comp))
    # starts are popped in (y, x) order already, so comps are sorted by least vertex
    return comps


def l1_components(A: Iterable) -> list[VertexSet]:
    """Maximal l1-connected subsets, ordered by least vertex (y first, then x)."""
    return _components(vertex_set(A), STEPS)


def linf_components(A: Iterable) -> list[VertexSet]:
    """Maximal subsets connected under l-infinity distance one (king moves)."""
    return _components(vertex_set(A), KING_STEPS)


def is_connected(A: Iterable) -> bool:
    A = vertex_set(A)
    require_nonempty(A)
    return len(l1_components(A)) == 1


def least_vertex(A: VertexSet) -> Vertex:
    return min(A, key=lambda p: (p[1], p[0]))


def sorted_vertices(A: Iterable) -> list[Vertex]:
    """Vertices sorted by (y, x), the canonical listing order."""
    return sorted(A, key=lambda p: (p[1], p[0]))


def translate(A: Iterable, t: Vertex) -> VertexSet:
    tx, ty = t
    return frozenset((x + tx, y + ty) for x, y in A)
