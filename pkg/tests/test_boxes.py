import random

import pytest
from hypothesis import given, strategies as st

from latticeiso.boxes import (
    Box,
    StandardForm,
    box_boundary_size,
    box_excess,
    box_size,
    box_to_set,
    corners,
    enclosing_box,
    excess_formula,
    has_corners,
    is_box,
    line_counts,
    normalize,
    parse_box,
    standard_box,
    standard_boxes,
    standard_form,
)
from latticeiso.errors import EmptyBoxError, EmptySetError
from latticeiso.lattice import boundary
from latticeiso.symmetry import Isometry, apply, canonical_key


def _tight(a, b, c, d):
    """Tight bounds by brute force over the points satisfying the constraints."""
    pts = [(u, v) for u in range(a, b + 1) for v in range(c, d + 1) if (u - v) % 2 == 0]
    if not pts:
        return None
    us = [p[0] for p in pts]
    vs = [p[1] for p in pts]
    return Box(min(us), max(us), min(vs), max(vs))


def test_normalize_against_brute_force():
    rng = random.Random(3)
    for _ in range(2000):
        a, c = rng.randint(-5, 5), rng.randint(-5, 5)
        b, d = a + rng.randint(0, 4), c + rng.randint(0, 4)
        want = _tight(a, b, c, d)
        if want is None:
            with pytest.raises(EmptyBoxError):
                normalize(a, b, c, d)
        else:
            assert normalize(a, b, c, d) == want


def test_empty_box():
    with pytest.raises(EmptyBoxError):
        normalize(0, 0, 1, 1)


@pytest.mark.parametrize("kind, alpha, beta, size", [
    ("B", 0, 0, 1), ("B", 1, 1, 2), ("B", 0, 2, 2), ("B", 2, 2, 5), ("B", 2, 3, 6),
    ("B", 4, 4, 13), ("Bhat", 2, 2, 4), ("B", 12, 20, 137), ("B", 60, 66, 2044),
])
def test_sizes(kind, alpha, beta, size):
    assert box_size(standard_box(kind, alpha, beta)) == size


def test_formulas_match_enumeration():
    for sf in standard_boxes(16):
        B = standard_box(sf.kind, sf.alpha, sf.beta)
        pts = box_to_set(B)
        assert len(pts) == box_size(B)
        assert len(boundary(pts)) == box_boundary_size(B)
        assert standard_form(enclosing_box(pts)) == sf
        assert is_box(pts)


@pytest.mark.parametrize("kind, alpha, beta, exc", [
    ("B", 4, 4, 2), ("B", 2, 3, 0), ("Bhat", 2, 2, 0), ("B", 0, 4, -1),
    ("B", 12, 20, 0), ("B", 60, 66, 27), ("B", 2, 6, 0), ("B", 4, 8, 1),
])
def test_excess_anchors(kind, alpha, beta, exc):
    assert box_excess(standard_box(kind, alpha, beta)) == exc
    assert excess_formula(kind, alpha, beta) == exc


def test_corner_types():
    assert has_corners(standard_box("B", 3, 5))
    assert not has_corners(standard_box("Bhat", 2, 4))
    assert len(corners(standard_box("B", 2, 2))) == 4
    assert corners(standard_box("Bhat", 4, 4)) == frozenset()


@given(st.sampled_from(list(standard_boxes(10))), st.integers(0, 7), st.integers(-5, 5), st.integers(-5, 5))
def test_standard_form_is_congruence_invariant(sf, s, tx, ty):
    pts = box_to_set(standard_box(sf.kind, sf.alpha, sf.beta))
    moved = apply(Isometry(s, (tx, ty)), pts)
    assert standard_form(enclosing_box(moved)) == sf
    assert is_box(moved)


def test_distinct_standard_forms_are_not_congruent():
    keys = [canonical_key(box_to_set(standard_box(sf.kind, sf.alpha, sf.beta))) for sf in standard_boxes(12)]
    assert len(keys) == len(set(keys))


def test_non_boxes():
    assert not is_box({(0, 0), (2, 0)})
    assert is_box({(0, 0), (1, 0), (0, 1)})  # the L-tromino is B(1,2)
    assert not is_box({(0, 0), (1, 0), (-1, 0), (0, 1)})
    with pytest.raises(EmptySetError):
        is_box(set())


def test_line_counts_of_diamond():
    by_u, by_v = line_counts(standard_box("B", 2, 2))
    assert by_u == [2, 1, 2]
    assert by_v == [2, 1, 2]


def test_parse_box():
    assert parse_box("B:4,4") == standard_box("B", 4, 4)
    assert parse_box("Bhat:2,2") == standard_box("Bhat", 2, 2)
    assert parse_box(" 0, 2, -1, 1 ") == standard_box("Bhat", 2, 2)
    for bad in ("C:1,2", "B:1", "1,2,3", ""):
        with pytest.raises(ValueError):
            parse_box(bad)
    with pytest.raises(ValueError):
        StandardForm("Bhat", 1, 2)
