import json

import pytest
from hypothesis import given, strategies as st

from latticeiso.errors import SetFileError
from latticeiso.graphmin import build_graph
from latticeiso.render import (
    graph_to_dict,
    graph_to_dot,
    graph_to_json,
    parse_set,
    render_ascii,
    render_svg,
    serialize_set,
)
from latticeiso.wangwang import ww


def test_serialize_singleton():
    assert serialize_set({(0, 0)}) == '{"vertices":[[0,0]]}'


@given(st.frozensets(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), max_size=20))
def test_round_trip(A):
    text = serialize_set(A)
    assert parse_set(text) == A
    assert serialize_set(parse_set(text)) == text


@pytest.mark.parametrize("text", [
    "{", "[]", '{"vertices": 3}', '{"vertices": [[0]]}', '{"vertices": [[0, 0], [0, 0]]}',
    '{"vertices": [[0.5, 0]]}', '{"vertices": [[true, 0]]}', '{"points": []}',
])
def test_parse_errors(text):
    with pytest.raises(SetFileError):
        parse_set(text)


def test_ascii_plus():
    assert render_ascii(ww(5)) == ".#.\n###\n.#.\n"


def test_ascii_shows_enclosing_box():
    art = render_ascii(ww(4), show_enc=True)
    assert art.count("#") == 4 and art.count("o") == 1


def test_svg():
    svg = render_svg(ww(4), show_enc=True)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("fill:black") == 4
    assert svg.count("fill:white") == 1


def test_exports_describe_same_graph():
    G = build_graph(6)
    data = json.loads(graph_to_json(G))
    assert data == graph_to_dict(G)
    dot = graph_to_dot(G)
    assert dot.startswith("graph ") and "->" not in dot
    ids = {n["id"] for n in data["nodes"]}
    dot_ids = {line.split('"')[1] for line in dot.splitlines() if "[label=" in line}
    assert ids == dot_ids
    dot_edges = sorted(tuple(line.split('"')[1::2]) for line in dot.splitlines() if " -- " in line)
    assert dot_edges == sorted(tuple(e) for e in data["edges"])
    for node in data["nodes"]:
        assert f'label="g{node["grading"]}:{node["id"]}"' in dot


def test_exports_deterministic():
    assert graph_to_json(build_graph(8)) == graph_to_json(build_graph(8, workers=2))
    assert graph_to_dot(build_graph(8)) == graph_to_dot(build_graph(8))
