"""Boxes: lattice points cut out by two diagonal bands.

``Box(a, b, c, d)`` is ``{(x, y) : a <= y - x <= b, c <= y + x <= d}``. Writing
``u = y - x`` and ``v = y + x``, lattice points are exactly the pairs with
``u = v (mod 2)``. Boxes are kept normalized: every bound is attained by
some point, which makes the parametrization unique.
"""

import re
from dataclasses import dataclass
from collections.abc import Iterable

from .errors import EmptyBoxError
from .lattice import VertexSet, require_nonempty, vertex_set


@dataclass(frozen=True, order=True)
class Box:
    a: int
    b: int
    c: int
    d: int

    @property
    def alpha(self) -> int:
        return self.b - self.a

    @property
    def beta(self) -> int:
        return self.d - self.c

    @property
    def modulus(self) -> tuple[int, int]:
        return tuple(sorted((self.alpha, self.beta)))

    def __contains__(self, v) -> bool:
        u, w = v[1] - v[0], v[1] + v[0]
        return self.a <= u <= self.b and self.c <= w <= self.d

    def __str__(self) -> str:
        return f"B({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True, order=True)
class StandardForm:
    kind: str  # "B" or "Bhat"
    alpha: int
    beta: int

    def __post_init__(self):
        if self.kind not in ("B", "Bhat"):
            raise ValueError(f"unknown box kind {self.kind!r}")
        if self.kind == "Bhat" and (self.alpha % 2 or self.beta % 2):
            raise ValueError("Bhat needs even alpha and beta")

    def __str__(self) -> str:
        return f"{self.kind}({self.alpha},{self.beta})"


def _first_with_parity(lo: int, parity: int) -> int:
    return lo if (lo - parity) % 2 == 0 else lo + 1


def _last_with_parity(hi: int, parity: int) -> int:
    return hi if (hi - parity) % 2 == 0 else hi - 1


def normalize(a: int, b: int, c: int, d: int) -> Box:
    """Tighten the four bounds until each is attained; raise if no point fits."""
    if a > b or c > d:
        raise EmptyBoxError(f"B({a},{b},{c},{d}) is empty")
    if c == d:
        a, b = _first_with_parity(a, c), _last_with_parity(b, c)
    if a == b:
        c, d = _first_with_parity(c, a), _last_with_parity(d, a)
    if a > b or c > d:
        raise EmptyBoxError(f"B({a},{b},{c},{d}) is empty")
    return Box(a, b, c, d)


def standard_box(kind: str, alpha: int, beta: int) -> Box:
    """``B(alpha, beta)`` or ``Bhat(alpha, beta)`` as a normalized box."""
    if alpha < 0 or beta < 0:
        raise EmptyBoxError("alpha and beta must be nonnegative")
    if kind == "B":
        return normalize(0, alpha, 0, beta)
    if kind == "Bhat":
        if alpha % 2 or beta % 2:
            raise ValueError("Bhat needs even alpha and beta")
        return normalize(0, alpha, -1, beta - 1)
    raise ValueError(f"unknown box kind {kind!r}")


def box_to_set(B: Box) -> VertexSet:
    out = []
    for u in range(B.a, B.b + 1):
        for v in range(_first_with_parity(B.c, u), B.d + 1, 2):
            out.append(((v - u) // 2, (u + v) // 2))
    return frozenset(out)


def corners(B: Box) -> VertexSet:
    """Points of ``B`` lying on two distinct extremal lines."""
    out = set()
    for u in {B.a, B.b}:
        for v in {B.c, B.d}:
            if (u - v) % 2 == 0:
                out.add(((v - u) // 2, (u + v) // 2))
    return frozenset(out)


def has_corners(B: Box) -> bool:
    return any((u - v) % 2 == 0 for u in (B.a, B.b) for v in (B.c, B.d))


def standard_form(B: Box) -> StandardForm:
    alpha, beta = B.modulus
    return StandardForm("B" if has_corners(B) else "Bhat", alpha, beta)


def box_size(B: Box) -> int:
    alpha, beta = B.alpha, B.beta
    if has_corners(B):
        return (alpha * beta + alpha + beta + 2) // 2
    return (alpha * beta + alpha + beta) // 2


def box_boundary_size(B: Box) -> int:
    return B.alpha + B.beta + 4


def excess_formula(kind: str, alpha: int, beta: int) -> int:
    """Closed-form excess of ``B(alpha, beta)`` or ``Bhat(alpha, beta)``.

    With ``r = (alpha + beta)/2`` and ``k = |beta - alpha|/2`` the corner type
    gives ``floor((floor(r) - k**2) / 2)`` and the cornerless type
    ``(r - k**2 - 2) / 2``. Both are evaluated over a common denominator of 8 so
    the floors stay exact for negative values.
    """
    floor_r = (alpha + beta) // 2
    k2_times4 = (beta - alpha) ** 2
    if kind == "B":
        return (4 * floor_r - k2_times4) // 8
    num = 2 * (alpha + beta) - k2_times4 - 8
    assert num % 8 == 0, (alpha, beta)
    return num // 8


def box_excess(B: Box) -> int:
    sf = standard_form(B)
    return excess_formula(sf.kind, sf.alpha, sf.beta)


def enclosing_box(A: Iterable) -> Box:
    A = vertex_set(A)
    require_nonempty(A)
    us = [y - x for x, y in A]
    vs = [y + x for x, y in A]
    return normalize(min(us), max(us), min(vs), max(vs))


def is_box(A: Iterable) -> bool:
    A = vertex_set(A)
    require_nonempty(A)
    # A is always inside its enclosing box, so equal sizes mean equality
    return len(A) == box_size(enclosing_box(A))


def line_counts(B: Box) -> tuple[list[int], list[int]]:
    """Points of ``B`` on each standard line meeting it.

    Returns counts for the lines ``y - x = u`` (u from a to b) and for the
    lines ``y + x = v`` (v from c to d).
    """
    by_u = [len(range(_first_with_parity(B.c, u), _last_with_parity(B.d, u) + 1, 2)) for u in range(B.a, B.b + 1)]
    by_v = [len(range(_first_with_parity(B.a, v), _last_with_parity(B.b, v) + 1, 2)) for v in range(B.c, B.d + 1)]
    return by_u, by_v


_SPEC_RE = re.compile(r"^\s*(B|Bhat)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$")
_RAW_RE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_box(text: str) -> Box:
    """Parse ``"B:alpha,beta"``, ``"Bhat:alpha,beta"`` or ``"a,b,c,d"``."""
    m = _SPEC_RE.match(text)
    if m:
        return standard_box(m.group(1), int(m.group(2)), int(m.group(3)))
    m = _RAW_RE.match(text)
    if m:
        return normalize(*(int(g) for g in m.groups()))
    raise ValueError(f"cannot parse box {text!r}; expected B:a,b, Bhat:a,b or a,b,c,d")


def standard_boxes(max_sum: int):
    """Every normalized standard box with ``alpha <= beta`` and ``alpha + beta <= max_sum``.

    ``B(0, odd)`` and ``Bhat(0, *)`` are skipped: they normalize to other
    standard boxes.
    """
    for s in range(max_sum + 1):
        for alpha in range(s // 2 + 1):
            beta = s - alpha
            if not (alpha == 0 and beta % 2):
                yield StandardForm("B", alpha, beta)
            if alpha >= 2 and alpha % 2 == 0 and beta % 2 == 0:
                yield StandardForm("Bhat", alpha, beta)


def box_of(sf: StandardForm) -> Box:
    return standard_box(sf.kind, sf.alpha, sf.beta)
