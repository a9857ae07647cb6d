"""The graded graph of congruence classes of minimal sets.

Nodes are classes of minimal sets, graded by size. Two classes are joined when
a representative of one is a representative of the other plus one vertex.

Every minimal set sits at the bottom of a chain of minimal sets that climbs one
vertex at a time to its enclosing box. So all classes of size ``n`` are found
by starting from every standard box that could reach down to ``n`` and deleting
vertices one at a time while the set stays minimal and keeps its enclosing box.
"""

import hashlib
import os
from collections import defaultdict
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .boxes import (
    Box,
    StandardForm,
    box_excess,
    box_of,
    box_size,
    box_to_set,
    enclosing_box,
    line_counts,
    standard_boxes,
    standard_form,
)
from .classify import (
    _is_efficient_modulus,
    is_dead,
    is_efficient,
    is_minimal,
    is_mortal,
    is_uniquely_minimal,
)
from .errors import HypothesisFailed, InvalidSizeError
from .lattice import VertexSet, is_connected, remove_delta, within_two
from .symmetry import canonical_key, key_to_set

THREADS_ENV = "LATTICEISO_THREADS"

Key = tuple  # canonical key: sorted tuple of (y, x)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def node_id(key: Key) -> str:
    """Stable 16-hex-digit id: blake2b of the canonical coordinate list."""
    text = ";".join(f"{x},{y}" for y, x in key)
    return hashlib.blake2b(text.encode(), digest_size=8).hexdigest()


@dataclass(frozen=True)
class Flags:
    dead: bool
    mortal: bool
    efficient: bool
    uniquely_minimal: bool
    connected: bool


@dataclass(frozen=True)
class MinClass:
    key: Key
    flags: Flags
    enc_standard: StandardForm

    @property
    def canonical(self) -> VertexSet:
        return key_to_set(self.key)

    @property
    def grading(self) -> int:
        return len(self.key)

    @property
    def id(self) -> str:
        return node_id(self.key)


def make_class(key: Key) -> MinClass:
    A = key_to_set(key)
    flags = Flags(
        dead=is_dead(A),
        mortal=is_mortal(A),
        efficient=is_efficient(A),
        uniquely_minimal=is_uniquely_minimal(A),
        connected=is_connected(A),
    )
    return MinClass(key, flags, standard_form(enclosing_box(A)))


def _candidate_boxes(lo: int, hi: int):
    """Standard boxes whose removal tree can reach some grading in ``[lo, hi]``.

    Over all moduli with ``alpha + beta = s``, ``size - excess`` is at least
    ``(s*s + 2*s + 4) / 8``, which bounds the search.
    """
    s = 0
    while s * s + 2 * s + 4 <= 8 * hi:
        for sf in standard_boxes(s):
            if sf.alpha + sf.beta != s:
                continue
            B = box_of(sf)
            size, exc = box_size(B), box_excess(B)
            if exc >= 0 and size >= lo and size - exc <= hi:
                yield sf
        s += 1


def _children(A: VertexSet, enc_size: int) -> Iterable[VertexSet]:
    """Minimal sets ``A - v`` with the same enclosing box, assuming ``A`` is minimal."""
    for v in A:
        if remove_delta(A, v):
            continue
        B = A - {v}
        # enc can only shrink, so comparing sizes is enough
        if box_size(enclosing_box(B)) == enc_size and is_minimal(B):
            yield B


def _explore(sf: StandardForm, lo: int, hi: int) -> dict[int, set[Key]]:
    """Classes with enclosing box ``sf`` and grading in ``[lo, hi]``."""
    B = box_of(sf)
    enc_size = box_size(B)
    floor = max(lo, enc_size - box_excess(B), 1)
    out: dict[int, set[Key]] = defaultdict(set)
    level = {canonical_key(box_to_set(B))}
    grading = enc_size
    while level:
        if grading <= hi:
            out[grading] |= level
        if grading <= floor:
            break
        nxt = set()
        for key in level:
            A = key_to_set(key)
            for child in _children(A, enc_size):
                nxt.add(canonical_key(child))
        level = nxt
        grading -= 1
    return out


def _explore_job(args):
    return _explore(*args)


def _collect(lo: int, hi: int, workers: int | None) -> dict[int, list[Key]]:
    workers = default_workers() if workers is None else workers
    jobs = [(sf, lo, hi) for sf in _candidate_boxes(lo, hi)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_explore_job, jobs, chunksize=1))
    else:
        parts = [_explore(*j) for j in jobs]
    merged: dict[int, set[Key]] = defaultdict(set)
    for part in parts:
        for g, keys in part.items():
            merged[g] |= keys
    return {g: sorted(merged[g]) for g in range(lo, hi + 1)}


def enumerate_minimal_classes(n: int, workers: int | None = None) -> list[MinClass]:
    """Every congruence class of minimal sets of size ``n``, sorted by canonical key."""
    if n < 1:
        raise InvalidSizeError("n must be >= 1")
    return [make_class(k) for k in _collect(n, n, workers)[n]]


@dataclass
class MinGraph:
    nodes: list[MinClass]
    edges: list[tuple[int, int]]  # (lower index, upper index)
    n_max: int
    index: dict[Key, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {c.key: i for i, c in enumerate(self.nodes)}

    def find(self, A: Iterable) -> int | None:
        """Index of the class of ``A``, or None if it is not a node."""
        return self.index.get(canonical_key(A))

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def by_grading(self) -> dict[int, list[int]]:
        out = defaultdict(list)
        for i, c in enumerate(self.nodes):
            out[c.grading].append(i)
        return dict(out)


def upward_keys(A: VertexSet) -> set[Key]:
    """Classes of the minimal sets ``A + u``.

    A vertex at distance three or more from ``A`` adds four boundary vertices
    and leaves the set disconnected, so it never yields a minimal set.
    """
    return {canonical_key(A | {u}) for u in within_two(A) if is_minimal(A | {u})}


def build_graph(n_max: int, workers: int | None = None) -> MinGraph:
    if n_max < 1:
        raise InvalidSizeError("n_max must be >= 1")
    classes = _collect(1, n_max, workers)
    keys = [k for g in range(1, n_max + 1) for k in classes[g]]
    nodes = [make_class(k) for k in keys]
    index = {k: i for i, k in enumerate(keys)}
    edges = set()
    for i, c in enumerate(nodes):
        if c.grading >= n_max:
            continue
        for up in upward_keys(c.canonical):
            edges.add((i, index[up]))
    return MinGraph(nodes, sorted(edges), n_max, index)


@dataclass(frozen=True)
class ComponentSummary:
    grading_min: int
    grading_max: int
    height: int
    isolated: bool
    contains_immortal: bool
    truncated: bool = False
    member_count: int | None = None
    gradings: tuple[int, ...] = ()
    members: tuple[str, ...] | None = None  # sorted node ids, when known

    def describe(self) -> str:
        if self.grading_min == self.grading_max:
            span = f"grading {self.grading_min}"
        else:
            span = f"gradings {self.grading_min}-{self.grading_max}"
        head = "isolated" if self.isolated else "component"
        text = f"{head}; {span}; height {self.height}"
        if self.member_count is not None and not self.isolated:
            text += f"; {self.member_count} classes"
        if self.truncated:
            text += " (truncated)"
        return text


def _heights(G: MinGraph, adj: list[list[int]]) -> list[int]:
    h = [1] * len(G.nodes)
    for i in sorted(range(len(G.nodes)), key=lambda k: G.nodes[k].grading):
        g = G.nodes[i].grading
        for j in adj[i]:
            if G.nodes[j].grading == g - 1:
                h[i] = max(h[i], h[j] + 1)
    return h


def component_members(G: MinGraph) -> list[list[int]]:
    """Node indices of each connected component, ordered by least index."""
    adj = G.neighbors()
    seen = [False] * len(G.nodes)
    out = []
    for s in range(len(G.nodes)):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def components(G: MinGraph) -> list[ComponentSummary]:
    adj = G.neighbors()
    heights = _heights(G, adj)
    out = []
    for comp in component_members(G):
        grads = sorted({G.nodes[i].grading for i in comp})
        out.append(ComponentSummary(
            grading_min=grads[0],
            grading_max=grads[-1],
            height=max(heights[i] for i in comp),
            isolated=len(comp) == 1 and not adj[comp[0]],
            contains_immortal=any(not G.nodes[i].flags.mortal for i in comp),
            truncated=grads[-1] >= G.n_max,
            member_count=len(comp),
            gradings=tuple(grads),
            members=tuple(sorted(G.nodes[i].id for i in comp)),
        ))
    return out


def component_of(G: MinGraph, A: Iterable) -> ComponentSummary:
    """Summary of the component containing the class of ``A``."""
    i = G.find(A)
    if i is None:
        raise KeyError("set is not a node of this graph")
    for comp, summary in zip(component_members(G), components(G)):
        if i in comp:
            return summary
    raise AssertionError("unreachable")


def isolated_vertices(G: MinGraph) -> list[MinClass]:
    adj = G.neighbors()
    return [c for i, c in enumerate(G.nodes) if not adj[i] and c.grading < G.n_max]


def component_hypotheses(B: Box) -> list[str]:
    """Names of the finite-component hypotheses that ``B`` fails."""
    failed = []
    d = box_excess(B)
    sf = standard_form(B)
    if d < 0:
        failed.append("excess")
    if sf.alpha < 2 or sf.beta < 2:
        failed.append("modulus")
    by_u, by_v = line_counts(B)
    if any(0 < k < d + 2 for k in by_u + by_v):
        failed.append("standard_lines")
    # a box is minimal iff its excess is nonnegative; dead means minimal and inefficient
    if d < 0 or _is_efficient_modulus(sf.kind, sf.alpha, sf.beta):
        failed.append("dead")
    return failed


def classify_component_of_box(B: Box, with_members: bool = False) -> ComponentSummary:
    """Component of a dead box read off from its excess, without building a graph.

    When the hypotheses hold, the component is every set obtained from ``B``
    by deleting at most ``d = Exc(B)`` vertices while staying minimal, one set
    per grading from ``|B| - d`` to ``|B|``. ``with_members`` also lists the
    classes, which requires walking that removal tree.
    """
    failed = component_hypotheses(B)
    if failed:
        raise HypothesisFailed(failed)
    d = box_excess(B)
    size = box_size(B)
    members = None
    count = None
    if with_members:
        found = _explore(standard_form(B), size - d, size)
        keys = sorted(k for g in found for k in found[g])
        members = tuple(sorted(node_id(k) for k in keys))
        count = len(keys)
    return ComponentSummary(
        grading_min=size - d,
        grading_max=size,
        height=d + 1,
        isolated=d == 0,
        contains_immortal=False,
        truncated=False,
        member_count=count,
        gradings=tuple(range(size - d, size + 1)),
        members=members,
    )
