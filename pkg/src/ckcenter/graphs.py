"""Finite directed multigraphs and the vertex-set combinatorics built on them.

Vertices and edges carry string identifiers; parallel edges and loops are
allowed.  Vertex subsets are plain frozensets.  The predicates and closures
here (descendants, hereditary and saturated sets, cycles, exits, factor
graphs) form the combinatorial layer the algebraic machinery is built on.

Everything in this module is a pure function of immutable values; nothing
holds hidden state, so all of it is safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

VertexSet = frozenset[str]

# These characters are delimiters of the element text grammar; allowing them
# inside identifiers would make printed monomials ambiguous.
_RESERVED_ID_CHARS = set("*^·")


class GraphError(ValueError):
    """Malformed graph, unknown identifier, or violated precondition."""


class SizeLimitError(RuntimeError):
    """An enumeration guard was exceeded; raise the relevant limit to proceed."""


def _check_identifier(kind: str, value: object) -> str:
    if not isinstance(value, str) or not value:
        raise GraphError(f"{kind} id must be a nonempty string, got {value!r}")
    if any(ch.isspace() for ch in value) or set(value) & _RESERVED_ID_CHARS:
        raise GraphError(f"invalid {kind} id {value!r}: whitespace and *, ^, · are reserved")
    return value


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


class Graph:
    """Immutable directed multigraph with ordered, named vertices and edges."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple[str, str, str]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in edges
        )
        self._validate()

    def _validate(self) -> None:
        if not self.vertices:
            raise GraphError("graph needs at least one vertex")
        seen: set[str] = set()
        for v in self.vertices:
            _check_identifier("vertex", v)
            if v in seen:
                raise GraphError(f"duplicate vertex id {v!r}")
            seen.add(v)
        edge_ids: set[str] = set()
        for e in self.edges:
            _check_identifier("edge", e.id)
            if e.id in edge_ids:
                raise GraphError(f"duplicate edge id {e.id!r}")
            if e.id in seen:
                raise GraphError(f"edge id {e.id!r} collides with a vertex id")
            edge_ids.add(e.id)
            for endpoint in (e.src, e.dst):
                if endpoint not in seen:
                    raise GraphError(f"unknown vertex {endpoint!r} in edge {e.id!r}")

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def _edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.src].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.dst].append(e)
        return {v: tuple(es) for v, es in table.items()}

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_map[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge {edge_id!r}") from None

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        try:
            return self._out[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        try:
            return self._in[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    @cached_property
    def _hash(self) -> int:
        return hash((self.vertices, self.edges))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def vertex_subset(g: Graph, members: Iterable[str]) -> VertexSet:
    """Validate a collection of vertex ids against g and freeze it."""
    w = frozenset(members)
    unknown = w - g.vertex_set
    if unknown:
        raise GraphError(f"unknown vertex {min(unknown)!r}")
    return w


def set_sort_key(w: VertexSet) -> tuple[int, tuple[str, ...]]:
    return (len(w), tuple(sorted(w)))


# ---------------------------------------------------------------------------
# paths and cycles

@dataclass(frozen=True)
class Path:
    """A composable edge sequence; with no edges it is just its source vertex."""

    source: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def range(self, g: Graph) -> str:
        return g.edge(self.edges[-1]).dst if self.edges else self.source

    def vertices(self, g: Graph) -> tuple[str, ...]:
        out = [self.source]
        for eid in self.edges:
            out.append(g.edge(eid).dst)
        return tuple(out)


def make_path(g: Graph, edge_ids: Iterable[str], source: str | None = None) -> Path:
    """Build a validated path; for zero-length paths pass the source vertex."""
    ids = tuple(edge_ids)
    if not ids:
        if source is None:
            raise GraphError("a zero-length path needs a source vertex")
        if source not in g.vertex_set:
            raise GraphError(f"unknown vertex {source!r}")
        return Path(source)
    at = g.edge(ids[0]).src
    if source is not None and source != at:
        raise GraphError(f"path source {source!r} does not match edge {ids[0]!r}")
    here = at
    for eid in ids:
        e = g.edge(eid)
        if e.src != here:
            raise GraphError(f"edges do not compose at {eid!r}")
        here = e.dst
    return Path(at, ids)


@dataclass(frozen=True)
class Cycle:
    """A closed path with pairwise distinct source vertices, stored in its
    canonical rotation: the first edge leaves the smallest vertex id."""

    edges: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self, g: Graph) -> tuple[str, ...]:
        return tuple(g.edge(eid).src for eid in self.edges)

    def vertex_set(self, g: Graph) -> VertexSet:
        return frozenset(self.vertices(g))


def canonical_cycle(g: Graph, edge_ids: Iterable[str]) -> Cycle:
    ids = tuple(edge_ids)
    if not ids:
        raise GraphError("a cycle needs at least one edge")
    path = make_path(g, ids)
    if path.range(g) != path.source:
        raise GraphError("edge sequence is not closed")
    srcs = [g.edge(eid).src for eid in ids]
    if len(set(srcs)) != len(srcs):
        raise GraphError("cycle visits a vertex twice")
    k = srcs.index(min(srcs))
    return Cycle(ids[k:] + ids[:k])


# ---------------------------------------------------------------------------
# reachability

def reachable_from(g: Graph, sources: Iterable[str]) -> VertexSet:
    seen = set(vertex_subset(g, sources))
    stack = list(seen)
    while stack:
        v = stack.pop()
        for e in g.out_edges(v):
            if e.dst not in seen:
                seen.add(e.dst)
                stack.append(e.dst)
    return frozenset(seen)


def reaches(g: Graph, targets: Iterable[str]) -> VertexSet:
    """All vertices from which some target is reachable (targets included)."""
    seen = set(vertex_subset(g, targets))
    stack = list(seen)
    while stack:
        v = stack.pop()
        for e in g.in_edges(v):
            if e.src not in seen:
                seen.add(e.src)
                stack.append(e.src)
    return frozenset(seen)


def descendants(g: Graph, v: str) -> VertexSet:
    """Vertices reachable from v by a path, v itself included."""
    return reachable_from(g, (v,))


def is_hereditary(g: Graph, w: Iterable[str]) -> bool:
    """True iff no edge leads from w out of w."""
    w = vertex_subset(g, w)
    return all(e.dst in w for v in w for e in g.out_edges(v))


def hereditary_closure(g: Graph, s: Iterable[str]) -> VertexSet:
    s = vertex_subset(g, s)
    return reachable_from(g, s) if s else frozenset()


def sinks(g: Graph) -> VertexSet:
    return frozenset(v for v in g.vertices if not g.out_edges(v))


def is_saturated(g: Graph, w: Iterable[str]) -> bool:
    """True iff every non-sink outside w keeps an edge whose range is outside w.

    Defined for hereditary w only; anything else is rejected.
    """
    w = vertex_subset(g, w)
    if not is_hereditary(g, w):
        raise GraphError(f"set {sorted(w)} is not hereditary")
    for v in g.vertices:
        if v in w:
            continue
        out = g.out_edges(v)
        if out and all(e.dst in w for e in out):
            return False
    return True


def saturation(g: Graph, w: Iterable[str]) -> VertexSet:
    """Least saturated superset: repeatedly absorb non-sinks all of whose
    edges already land inside."""
    w = vertex_subset(g, w)
    if not is_hereditary(g, w):
        raise GraphError(f"set {sorted(w)} is not hereditary")
    current = set(w)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in current:
                continue
            out = g.out_edges(v)
            if out and all(e.dst in current for e in out):
                current.add(v)
                changed = True
    return frozenset(current)


# ---------------------------------------------------------------------------
# cycles, exits, simplicity

def _iter_cycles(g: Graph) -> Iterator[Cycle]:
    """All cycles, each anchored at its smallest vertex so the emitted tuple
    is already the canonical rotation.  DFS never walks below the anchor,
    which also guarantees each cycle appears exactly once."""
    pos = {v: i for i, v in enumerate(sorted(g.vertices))}
    found: list[Cycle] = []

    for anchor in sorted(g.vertices):
        apos = pos[anchor]
        trail: list[str] = []
        on_trail = {anchor}

        def walk(v: str) -> None:
            for e in g.out_edges(v):
                if e.dst == anchor:
                    found.append(Cycle(tuple(trail) + (e.id,)))
                elif e.dst not in on_trail and pos[e.dst] > apos:
                    on_trail.add(e.dst)
                    trail.append(e.id)
                    walk(e.dst)
                    trail.pop()
                    on_trail.discard(e.dst)

        walk(anchor)
        yield from found
        found.clear()


def cycles(g: Graph) -> list[Cycle]:
    """All cycles in canonical rotation, sorted by their edge id tuples."""
    return sorted(_iter_cycles(g), key=lambda c: c.edges)


def exits(g: Graph, cycle: Cycle) -> frozenset[str]:
    """Edges that leave a cycle vertex but are not part of the cycle."""
    on = {g.edge(eid).src for eid in cycle.edges}
    body = set(cycle.edges)
    return frozenset(e.id for e in g.edges if e.src in on and e.id not in body)


def ne_cycles(g: Graph) -> list[Cycle]:
    """Cycles without exits; their vertex sets are always hereditary."""
    return [c for c in cycles(g) if not exits(g, c)]


def find_cycle_within(g: Graph, allowed: Iterable[str]) -> Cycle | None:
    """First cycle (in DFS order) whose edges stay inside the allowed set."""
    allowed = vertex_subset(g, allowed)
    state: dict[str, str] = {}
    trail: list[Edge] = []
    hit: list[Cycle] = []

    def walk(v: str) -> bool:
        state[v] = "active"
        for e in g.out_edges(v):
            if e.dst not in allowed:
                continue
            if e.dst not in state:
                trail.append(e)
                if walk(e.dst):
                    return True
                trail.pop()
            elif state[e.dst] == "active":
                verts = [trail[0].src if trail else v] + [t.dst for t in trail]
                k = verts.index(e.dst)
                hit.append(canonical_cycle(g, tuple(t.id for t in trail[k:]) + (e.id,)))
                return True
        state[v] = "done"
        return False

    for v in g.vertices:
        if v in allowed and v not in state:
            trail.clear()
            if walk(v):
                return hit[0]
    return None


def factor_graph(g: Graph, w: Iterable[str]) -> Graph:
    """Drop a hereditary saturated set w and every edge whose range is in w."""
    w = vertex_subset(g, w)
    if not is_hereditary(g, w):
        raise GraphError(f"set {sorted(w)} is not hereditary")
    if not is_saturated(g, w):
        raise GraphError(f"set {sorted(w)} is not saturated")
    if w == g.vertex_set:
        raise GraphError("cannot factor by the full vertex set")
    return Graph(
        (v for v in g.vertices if v not in w),
        (e for e in g.edges if e.dst not in w),
    )


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    witness_subset: VertexSet | None = None
    witness_cycle: Cycle | None = None


def is_simple_graph(g: Graph) -> SimplicityReport:
    """Simplicity criterion: no proper nonempty hereditary saturated subset
    and every cycle has an exit.

    A proper hereditary saturated subset exists iff the saturated closure of
    some vertex's descendants is proper, so scanning vertices suffices.  The
    witness is the smallest such closure (by size, then members); failing
    that, the first exitless cycle found.
    """
    proper = []
    for v in g.vertices:
        t = saturation(g, hereditary_closure(g, (v,)))
        if t != g.vertex_set:
            proper.append(t)
    if proper:
        return SimplicityReport(False, witness_subset=min(proper, key=set_sort_key))
    for c in _iter_cycles(g):
        if not exits(g, c):
            return SimplicityReport(False, witness_cycle=c)
    return SimplicityReport(True)


# ---------------------------------------------------------------------------
# JSON interface

def parse_graph(text: str) -> Graph:
    """Parse the graph JSON format.

    ``{"vertices": ["v1", ...], "edges": [{"id": ..., "src": ..., "dst": ...}, ...]}``

    Exactly these keys; unknown keys, duplicate ids, dangling endpoints and
    an empty vertex list are all errors that name the offending token.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphError("top-level JSON value must be an object")
    for key in doc:
        if key not in ("vertices", "edges"):
            raise GraphError(f"unknown key {key!r}")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise GraphError(f"missing key {key!r}")
    if not isinstance(doc["vertices"], list):
        raise GraphError("'vertices' must be a list of strings")
    if not isinstance(doc["edges"], list):
        raise GraphError("'edges' must be a list of objects")
    edges = []
    for item in doc["edges"]:
        if not isinstance(item, dict):
            raise GraphError(f"edge entry {item!r} must be an object")
        for key in item:
            if key not in ("id", "src", "dst"):
                raise GraphError(f"unknown key {key!r} in edge {item.get('id')!r}")
        for key in ("id", "src", "dst"):
            if key not in item:
                raise GraphError(f"missing key {key!r} in edge {item!r}")
            if not isinstance(item[key], str):
                raise GraphError(f"edge field {key!r} must be a string, got {item[key]!r}")
        edges.append(Edge(item["id"], item["src"], item["dst"]))
    return Graph(doc["vertices"], edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
    }
