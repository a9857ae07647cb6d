"""File formats and pictures: set JSON, graph JSON/DOT, ASCII and SVG renders."""

import json
from collections.abc import Iterable

from .boxes import box_to_set, enclosing_box
from .errors import SetFileError
from .graphmin import MinGraph
from .lattice import VertexSet, sorted_vertices, vertex_set

CELL = 20  # SVG pixels per lattice cell


# -- set files ---------------------------------------------------------------

def _as_int(value) -> int:
    # bool is an int subclass but never a coordinate
    if isinstance(value, bool) or not isinstance(value, int):
        raise SetFileError(f"coordinate {value!r} is not an integer")
    return value


def parse_set(text: str) -> VertexSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SetFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise SetFileError('expected an object with a "vertices" list')
    points = []
    for item in data["vertices"]:
        if not isinstance(item, list) or len(item) != 2:
            raise SetFileError(f"vertex {item!r} is not an [x, y] pair")
        points.append((_as_int(item[0]), _as_int(item[1])))
    A = vertex_set(points)
    if len(A) != len(points):
        raise SetFileError("duplicate vertices")
    return A


def serialize_set(A: Iterable) -> str:
    """Compact JSON, vertices sorted by (y, x)."""
    pts = [[x, y] for x, y in sorted_vertices(vertex_set(A))]
    return json.dumps({"vertices": pts}, separators=(",", ":"))


# -- graph exports -----------------------------------------------------------

def graph_to_dict(G: MinGraph) -> dict:
    nodes = []
    for c in G.nodes:
        nodes.append({
            "id": c.id,
            "grading": c.grading,
            "vertices": [[x, y] for x, y in sorted_vertices(c.canonical)],
            "standard_form": str(c.enc_standard),
            "flags": {
                "dead": c.flags.dead,
                "mortal": c.flags.mortal,
                "efficient": c.flags.efficient,
                "uniquely_minimal": c.flags.uniquely_minimal,
                "connected": c.flags.connected,
            },
        })
    edges = [[G.nodes[i].id, G.nodes[j].id] for i, j in G.edges]
    return {"n_max": G.n_max, "nodes": nodes, "edges": edges}


def graph_to_json(G: MinGraph) -> str:
    return json.dumps(graph_to_dict(G), separators=(",", ":"), sort_keys=True)


def graph_to_dot(G: MinGraph) -> str:
    lines = [f"graph minimal_sets_{G.n_max} {{"]
    for c in G.nodes:
        lines.append(f'  "{c.id}" [label="g{c.grading}:{c.id}"];')
    for i, j in G.edges:
        lines.append(f'  "{G.nodes[i].id}" -- "{G.nodes[j].id}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- pictures ----------------------------------------------------------------

def _cells(A: VertexSet, show_enc: bool):
    extra = box_to_set(enclosing_box(A)) - A if show_enc and A else frozenset()
    return A, extra


def render_ascii(A: Iterable, show_enc: bool = False) -> str:
    """``#`` for vertices of ``A``, ``o`` for the rest of ``enc(A)``, ``.`` elsewhere."""
    A = vertex_set(A)
    if not A:
        return ""
    filled, hollow = _cells(A, show_enc)
    pts = filled | hollow
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(min(xs), max(xs) + 1):
            row.append("#" if (x, y) in filled else "o" if (x, y) in hollow else ".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def render_svg(A: Iterable, show_enc: bool = False) -> str:
    """Unit squares centred on lattice points, y axis pointing up.

    Vertices of ``A`` are black; with ``show_enc`` the remaining vertices of the
    enclosing box are drawn white with a black outline.
    """
    A = vertex_set(A)
    filled, hollow = _cells(A, show_enc)
    pts = filled | hollow
    if not pts:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"/>\n'
    xmin = min(p[0] for p in pts)
    ymax = max(p[1] for p in pts)
    w = (max(p[0] for p in pts) - xmin + 1) * CELL
    h = (ymax - min(p[1] for p in pts) + 1) * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2}" height="{h + 2}" '
        f'viewBox="-1 -1 {w + 2} {h + 2}">'
    ]
    for (x, y), style in sorted(
        [(p, "fill:black") for p in filled] + [(p, "fill:white;stroke:black") for p in hollow],
        key=lambda item: (-item[0][1], item[0][0]),
    ):
        px = (x - xmin) * CELL
        py = (ymax - y) * CELL
        out.append(f'  <rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" style="{style}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
