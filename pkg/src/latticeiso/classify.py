"""Per-set classifiers: saturation, minimality and the life-cycle properties.

Minimality is decided by comparing a set against its enclosing box. Let
``N = |enc(A) - A|`` and ``E = Exc(enc(A))``. Then ``A`` is minimal exactly when

* ``|bdry A| == |bdry enc(A)|`` and ``N <= E`` (the default route), or
* every hole of ``A`` in ``enc(A)`` is the apex of a cone missing ``A``,
  and ``N <= E`` (the cone route), or
* ``excess_of_set(A) >= 0`` (the excess route).

``is_minimal(A, verify=True)`` evaluates all three and raises
``ConsistencyError`` if they disagree.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from .boxes import (
    Box,
    box_boundary_size,
    box_excess,
    box_size,
    box_to_set,
    enclosing_box,
    is_box,
    standard_form,
)
from .errors import ConsistencyError, NoSuchBoundaryError, NotMinimalError
from .lattice import (
    Vertex,
    VertexSet,
    add_delta,
    boundary_size,
    require_nonempty,
    vertex_set,
    within_two,
)
from .symmetry import POINT_SYMMETRIES, Isometry
from .wangwang import min_size_for_boundary

# Cone orientations as sign pairs on (u, v) = (y - x, y + x) relative to the apex.
ORIENTATIONS = {
    "above": (1, 1),
    "left": (1, -1),
    "below": (-1, -1),
    "right": (-1, 1),
}


@dataclass(frozen=True)
class Cone:
    apex: Vertex
    orientation: str

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"unknown orientation {self.orientation!r}")

    def __contains__(self, p) -> bool:
        su, sv = ORIENTATIONS[self.orientation]
        du = (p[1] - p[0]) - (self.apex[1] - self.apex[0])
        dv = (p[1] + p[0]) - (self.apex[1] + self.apex[0])
        return su * du >= 0 and sv * dv >= 0


# Each configuration is (F, N): F must lie in A and N outside it. Adding the
# vertex of N never increases the boundary, so a set containing one of these
# is not saturated.
FORBIDDEN_CONFIGURATIONS = (
    (((-1, 0), (0, 1), (0, -1)), ((0, 0),)),
    (((0, -1), (1, 1)), ((0, 0),)),
    (((-1, -1), (0, -1), (1, -1)), ((0, 0),)),
    (((-1, -1), (1, 1)), ((0, 0),)),
)


@dataclass(frozen=True)
class ForbiddenWitness:
    config: int  # index into FORBIDDEN_CONFIGURATIONS
    isometry: Isometry

    def filled(self) -> VertexSet:
        return frozenset(self.isometry(p) for p in FORBIDDEN_CONFIGURATIONS[self.config][0])

    def empty(self) -> VertexSet:
        return frozenset(self.isometry(p) for p in FORBIDDEN_CONFIGURATIONS[self.config][1])


@dataclass(frozen=True)
class MinimalityCertificate:
    input_size: int
    boundary_size: int
    enc: Box
    enc_boundary_size: int
    n_removed: int
    enc_excess: int
    cone_check: bool
    verdict: bool

    def explain(self) -> str:
        lines = [
            f"|A| = {self.input_size}, |bdry A| = {self.boundary_size}",
            f"enc(A) = {self.enc} ~ {standard_form(self.enc)}, |bdry enc(A)| = {self.enc_boundary_size}",
            f"N = |enc(A) - A| = {self.n_removed}, E = Exc(enc(A)) = {self.enc_excess}",
            f"complement is a union of cones: {'yes' if self.cone_check else 'no'}",
            "minimal" if self.verdict else "not minimal",
        ]
        return "\n".join(lines)


def _nonempty(A: Iterable) -> VertexSet:
    A = vertex_set(A)
    require_nonempty(A)
    return A


def is_saturated(A: Iterable) -> bool:
    """True iff adding any single vertex strictly enlarges the boundary.

    Vertices at l1-distance three or more add four new boundary vertices, so
    only ``within_two(A)`` needs checking.
    """
    A = _nonempty(A)
    return all(add_delta(A, v) > 0 for v in within_two(A))


def find_forbidden_configuration(A: Iterable) -> ForbiddenWitness | None:
    A = vertex_set(A)
    if not A:
        return None
    for cid, (filled, empty) in enumerate(FORBIDDEN_CONFIGURATIONS):
        anchor = filled[0]
        for s in range(len(POINT_SYMMETRIES)):
            g = Isometry(s)
            ax, ay = g(anchor)
            for x, y in A:
                iso = Isometry(s, (x - ax, y - ay))
                if all(iso(p) in A for p in filled) and not any(iso(p) in A for p in empty):
                    return ForbiddenWitness(cid, iso)
    return None


def _hole_has_free_cone(h: Vertex, uv: list[tuple[int, int]]) -> bool:
    hu, hv = h[1] - h[0], h[1] + h[0]
    for su, sv in ORIENTATIONS.values():
        if not any(su * (u - hu) >= 0 and sv * (v - hv) >= 0 for u, v in uv):
            return True
    return False


def _holes(A: VertexSet, enc: Box) -> list[Vertex]:
    return [p for p in box_to_set(enc) if p not in A]


def complement_is_union_of_cones(A: Iterable) -> bool:
    """True iff every vertex outside ``A`` is the apex of a cone missing ``A``.

    Outside ``enc(A)`` this always holds, so only the holes inside are tested.
    """
    A = _nonempty(A)
    uv = [(y - x, y + x) for x, y in A]
    return all(_hole_has_free_cone(h, uv) for h in _holes(A, enclosing_box(A)))


def free_cone_at(A: Iterable, h: Vertex) -> Cone | None:
    """Some cone with apex ``h`` disjoint from ``A``, if one exists."""
    A = _nonempty(A)
    for name in ORIENTATIONS:
        cone = Cone(h, name)
        if not any(p in cone for p in A):
            return cone
    return None


def excess_of_set(A: Iterable) -> int:
    """``|A|`` minus the size of the smallest minimal set with the same boundary size."""
    A = _nonempty(A)
    try:
        return len(A) - min_size_for_boundary(boundary_size(A))
    except NoSuchBoundaryError as exc:
        raise ConsistencyError(f"nonempty set with impossible boundary size: {exc}") from exc


def _route_boundary(A: VertexSet, enc: Box) -> bool:
    n_removed = box_size(enc) - len(A)
    return boundary_size(A) == box_boundary_size(enc) and n_removed <= box_excess(enc)


def _route_cones(A: VertexSet, enc: Box) -> bool:
    n_removed = box_size(enc) - len(A)
    if n_removed > box_excess(enc):
        return False
    uv = [(y - x, y + x) for x, y in A]
    return all(_hole_has_free_cone(h, uv) for h in _holes(A, enc))


def is_minimal(A: Iterable, verify: bool = False) -> bool:
    A = _nonempty(A)
    enc = enclosing_box(A)
    verdict = _route_boundary(A, enc)
    if verify:
        cones = _route_cones(A, enc)
        by_excess = excess_of_set(A) >= 0
        if not verdict == cones == by_excess:
            raise ConsistencyError(
                f"minimality routes disagree: boundary={verdict} cones={cones} excess={by_excess}"
            )
    return verdict


def minimality_certificate(A: Iterable) -> MinimalityCertificate:
    A = _nonempty(A)
    enc = enclosing_box(A)
    bsize = boundary_size(A)
    enc_bsize = box_boundary_size(enc)
    n_removed = box_size(enc) - len(A)
    exc = box_excess(enc)
    return MinimalityCertificate(
        input_size=len(A),
        boundary_size=bsize,
        enc=enc,
        enc_boundary_size=enc_bsize,
        n_removed=n_removed,
        enc_excess=exc,
        cone_check=complement_is_union_of_cones(A),
        verdict=bsize == enc_bsize and n_removed <= exc,
    )


def _is_efficient_modulus(kind: str, alpha: int, beta: int) -> bool:
    if kind != "B":
        return False
    return beta - alpha in (0, 1) or (beta - alpha == 2 and alpha % 2 == 0)


def is_efficient(A: Iterable) -> bool:
    A = _nonempty(A)
    if not is_box(A):
        return False
    sf = standard_form(enclosing_box(A))
    return _is_efficient_modulus(sf.kind, sf.alpha, sf.beta)


def _require_minimal(A: VertexSet) -> None:
    if not is_minimal(A):
        raise NotMinimalError("this property is only defined for minimal sets")


def is_dead(A: Iterable) -> bool:
    A = _nonempty(A)
    _require_minimal(A)
    return is_box(A) and not is_efficient(A)


def is_mortal(A: Iterable) -> bool:
    A = _nonempty(A)
    _require_minimal(A)
    return is_dead(box_to_set(enclosing_box(A)))


def is_uniquely_minimal(A: Iterable) -> bool:
    A = _nonempty(A)
    _require_minimal(A)
    if not is_box(A):
        return False
    sf = standard_form(enclosing_box(A))
    if sf.kind != "B":
        return False
    return sf.beta == sf.alpha + 1 or (sf.alpha == sf.beta and sf.alpha % 2 == 0)
