import pytest
from hypothesis import given, strategies as st

from latticeiso.errors import CoordinateRangeError, EmptySetError
from latticeiso.lattice import (
    add_delta,
    boundary,
    boundary_size,
    closed_neighborhood,
    is_connected,
    l1_components,
    linf_components,
    remove_delta,
    sorted_vertices,
    vertex_set,
    within_two,
)

small_sets = st.frozensets(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=25)


def test_singleton_boundary():
    assert boundary({(0, 0)}) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert boundary_size({(0, 0)}) == 4


def test_empty_boundary():
    assert boundary(set()) == frozenset()
    assert boundary_size(set()) == 0


def test_closed_neighborhood_of_domino():
    N = closed_neighborhood({(0, 0), (1, 0)})
    assert len(N) == 8


def test_coordinate_range():
    with pytest.raises(CoordinateRangeError):
        vertex_set([(2**31, 0)])


def test_connectivity():
    assert is_connected({(0, 0), (1, 0)})
    assert not is_connected({(0, 0), (1, 1)})
    assert len(linf_components({(0, 0), (1, 1)})) == 1
    with pytest.raises(EmptySetError):
        is_connected(set())


def test_components_ordered_by_least_vertex():
    comps = l1_components({(5, 0), (0, 3), (0, 4), (-2, 0)})
    assert [min(c, key=lambda p: (p[1], p[0])) for c in comps] == [(-2, 0), (5, 0), (0, 3)]


def test_sorted_vertices_y_first():
    assert sorted_vertices({(1, 0), (0, 1), (-1, 1)}) == [(1, 0), (-1, 1), (0, 1)]


@given(small_sets, st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
def test_add_delta_matches_recount(A, v):
    if v in A:
        return
    assert add_delta(A, v) == boundary_size(A | {v}) - boundary_size(A)


@given(small_sets, st.data())
def test_remove_delta_matches_recount(A, data):
    v = data.draw(st.sampled_from(sorted(A)))
    assert remove_delta(A, v) == boundary_size(A - {v}) - boundary_size(A)


@given(small_sets, st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_far_vertices_add_four(A, v):
    # the reason saturation and edge searches only look within distance two
    if v in A or v in within_two(A):
        return
    assert add_delta(A, v) == 4


@given(small_sets)
def test_boundary_size_matches_boundary(A):
    assert boundary_size(A) == len(boundary(A))
