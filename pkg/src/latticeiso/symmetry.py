"""Graph automorphisms of the lattice and canonical forms up to congruence.

Every automorphism is one of eight point symmetries followed by an integer
translation.
"""

from dataclasses import dataclass
from collections.abc import Iterable

from .lattice import Vertex, VertexSet, require_nonempty, vertex_set

# (a, b, c, d) acts as (x, y) -> (a*x + b*y, c*x + d*y)
POINT_SYMMETRIES = (
    (1, 0, 0, 1),    # identity
    (0, -1, 1, 0),   # rotate 90 counterclockwise
    (-1, 0, 0, -1),  # rotate 180
    (0, 1, -1, 0),   # rotate 270
    (1, 0, 0, -1),   # reflect y -> -y
    (-1, 0, 0, 1),   # reflect x -> -x
    (0, 1, 1, 0),    # reflect in y = x
    (0, -1, -1, 0),  # reflect in y = -x
)
SYMMETRY_NAMES = ("id", "rot90", "rot180", "rot270", "flip_y", "flip_x", "diag", "antidiag")
_INDEX = {m: i for i, m in enumerate(POINT_SYMMETRIES)}


def _matmul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


@dataclass(frozen=True)
class Isometry:
    point_symmetry: int = 0
    translation: Vertex = (0, 0)

    def __post_init__(self):
        if not 0 <= self.point_symmetry < 8:
            raise ValueError("point_symmetry must be in 0..7")

    def __call__(self, v: Vertex) -> Vertex:
        a, b, c, d = POINT_SYMMETRIES[self.point_symmetry]
        x, y = v
        tx, ty = self.translation
        return (a * x + b * y + tx, c * x + d * y + ty)

    def compose(self, other: "Isometry") -> "Isometry":
        """The isometry ``self . other`` (apply ``other`` first)."""
        m = _matmul(POINT_SYMMETRIES[self.point_symmetry], POINT_SYMMETRIES[other.point_symmetry])
        return Isometry(_INDEX[m], self(other.translation))

    def inverse(self) -> "Isometry":
        a, b, c, d = POINT_SYMMETRIES[self.point_symmetry]
        # orthogonal matrix: inverse is the transpose
        inv = Isometry(_INDEX[(a, c, b, d)])
        tx, ty = inv(self.translation)
        return Isometry(inv.point_symmetry, (-tx, -ty))


def apply(g: Isometry, A: Iterable) -> VertexSet:
    return frozenset(g(v) for v in A)


def _images(A):
    for a, b, c, d in POINT_SYMMETRIES:
        pts = sorted((c * x + d * y, a * x + b * y) for x, y in A)  # (y, x) pairs
        y0, x0 = pts[0]
        yield tuple((y - y0, x - x0) for y, x in pts)


def canonical_key(A: Iterable) -> tuple:
    """Sorted ``(y, x)`` tuple of the canonical representative.

    Lexicographically least over the eight point-symmetric images, each
    translated so its least vertex is the origin.
    """
    A = vertex_set(A)
    require_nonempty(A)
    return min(_images(A))


def key_to_set(key: tuple) -> VertexSet:
    return frozenset((x, y) for y, x in key)


def canonical_form(A: Iterable) -> VertexSet:
    return key_to_set(canonical_key(A))


def are_congruent(A: Iterable, B: Iterable) -> bool:
    A = vertex_set(A)
    B = vertex_set(B)
    require_nonempty(A)
    require_nonempty(B)
    if len(A) != len(B):
        return False
    return canonical_key(A) == canonical_key(B)
