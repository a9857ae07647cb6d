import pytest

from latticeiso.boxes import box_size, box_to_set, normalize, standard_box
from latticeiso.errors import HypothesisFailed, InvalidSizeError
from latticeiso.graphmin import (
    build_graph,
    classify_component_of_box,
    component_hypotheses,
    component_of,
    components,
    enumerate_minimal_classes,
    isolated_vertices,
    node_id,
)
from latticeiso.classify import is_dead, is_efficient, is_minimal, is_mortal, is_uniquely_minimal
from latticeiso.lattice import is_connected
from latticeiso.symmetry import canonical_form, canonical_key
from latticeiso.wangwang import ww


def box(kind, a, b):
    return box_to_set(standard_box(kind, a, b))


@pytest.fixture(scope="module")
def g13():
    return build_graph(13)


def test_class_counts():
    counts = [len(enumerate_minimal_classes(n)) for n in range(1, 7)]
    assert counts[:5] == [1, 2, 1, 3, 1]
    keys = {c.key for c in enumerate_minimal_classes(4)}
    assert keys == {canonical_key(ww(4)), canonical_key(box("Bhat", 2, 2)), canonical_key(box("B", 1, 3))}
    assert [c.key for c in enumerate_minimal_classes(5)] == [canonical_key(box("B", 2, 2))]


def test_classes_sorted_and_consistent():
    for n in range(1, 12):
        classes = enumerate_minimal_classes(n)
        assert [c.key for c in classes] == sorted(c.key for c in classes)
        for c in classes:
            A = c.canonical
            assert canonical_form(A) == A and c.grading == n
            assert is_minimal(A, verify=True)
            assert c.flags.dead == is_dead(A)
            assert c.flags.mortal == is_mortal(A)
            assert c.flags.efficient == is_efficient(A)
            assert c.flags.uniquely_minimal == is_uniquely_minimal(A)
            assert c.flags.connected == is_connected(A)


def test_workers_do_not_change_output():
    assert build_graph(9, workers=2).edges == build_graph(9, workers=1).edges


def test_small_graphs():
    G = build_graph(2)
    assert len(G.nodes) == 3 and len(G.edges) == 2
    G = build_graph(4)
    assert G.find(box("Bhat", 2, 2)) in {j for i, j in G.edges if i == G.find(ww(3))}
    assert isolated_vertices(G) == []
    assert isolated_vertices(build_graph(1)) == []
    assert len(build_graph(5).by_grading()[5]) == 1
    with pytest.raises(InvalidSizeError):
        build_graph(0)
    with pytest.raises(InvalidSizeError):
        enumerate_minimal_classes(0)


def test_edges_join_consecutive_gradings(g13):
    for i, j in g13.edges:
        assert g13.nodes[j].grading == g13.nodes[i].grading + 1
        assert g13.nodes[i].canonical  # nonempty


def test_ww_chain_and_immortal_component(g13):
    adj = g13.neighbors()
    for n in range(1, 13):
        assert g13.find(ww(n + 1)) in adj[g13.find(ww(n))]
    summary = component_of(g13, box("B", 3, 3))
    assert summary.contains_immortal and summary.truncated
    for a in range(4):
        assert component_of(g13, box("B", a, a)) == summary


def test_b26_isolated():
    G = build_graph(12)
    assert canonical_key(box("B", 2, 6)) in {c.key for c in isolated_vertices(G)}


def test_b48_component():
    summary = component_of(build_graph(24), box("B", 4, 8))
    assert summary.gradings == (22, 23)
    assert summary.height == 2
    assert not summary.truncated
    # the direct criterion does not apply here, so the graph is the only witness
    assert "standard_lines" in component_hypotheses(standard_box("B", 4, 8))


def test_component_summaries(g13):
    comps = components(g13)
    assert sum(c.member_count for c in comps) == len(g13.nodes)
    for c in comps:
        assert c.isolated == (c.member_count == 1 and c.height == 1)
        assert 1 <= c.height <= c.grading_max - c.grading_min + 1


def test_component_criterion():
    iso = classify_component_of_box(normalize(0, 20, 0, 12))
    assert iso.describe() == "isolated; grading 137; height 1"
    assert box_size(normalize(0, 20, 0, 12)) == 137
    tall = classify_component_of_box(normalize(0, 66, 0, 60))
    assert tall.height == 28 and tall.gradings == tuple(range(2017, 2045))
    with pytest.raises(HypothesisFailed) as info:
        classify_component_of_box(standard_box("B", 2, 3))
    assert "dead" in info.value.which
    with pytest.raises(HypothesisFailed) as info:
        classify_component_of_box(standard_box("B", 0, 4))
    assert info.value.which[0] == "excess"


def test_node_ids_stable():
    key = canonical_key({(0, 0)})
    assert node_id(key) == node_id(canonical_key({(5, 5)}))
    assert len(node_id(key)) == 16


def test_default_workers_from_env(monkeypatch):
    from latticeiso.graphmin import default_workers
    monkeypatch.delenv("LATTICEISO_THREADS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("LATTICEISO_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("LATTICEISO_THREADS", "many")
    assert default_workers() == 1
