"""Immutable simple graphs with contraction-aware vertex labels.

Every vertex is a ``frozenset`` of original vertex identifiers. Fresh graphs
have singleton labels; contraction merges labels by union, so the history of
a contracted vertex stays visible. Functions that take a vertex accept either
the label itself or, for singleton labels, the bare original identifier.
"""
from __future__ import annotations

from typing import Hashable, Iterable

from .errors import GraphError

__all__ = [
    "Graph",
    "contract",
    "identify",
    "delete",
    "components",
    "bridges",
    "cliqueify",
    "extract_matching",
    "format_label",
]

Label = frozenset


def _sort_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def format_label(label: frozenset) -> str:
    """``a`` for a singleton label, ``{a,b}`` for a merged one."""
    members = sorted(label, key=_sort_key)
    if len(members) == 1:
        return str(members[0])
    return "{" + ",".join(map(str, members)) + "}"


class Graph:
    """A labeled simple undirected graph.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> g.n, g.m
    (3, 2)
    """

    __slots__ = ("_vertices", "_adj", "_index", "_masks")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        verts: list[frozenset] = []
        seen: set = set()
        for v in vertices:
            label = v if isinstance(v, frozenset) else frozenset([v])
            if not label:
                raise GraphError("vertex labels must be nonempty")
            if seen & label:
                raise GraphError(f"vertex label {format_label(label)} overlaps another label")
            seen |= label
            verts.append(label)
        index = {v: i for i, v in enumerate(verts)}
        adj: dict[frozenset, set] = {v: set() for v in verts}
        for e in edges:
            u, w = e
            u = self._lookup(index, u)
            w = self._lookup(index, w)
            if u == w:
                raise GraphError(f"self-loop at {format_label(u)}")
            adj[u].add(w)
            adj[w].add(u)
        object.__setattr__(self, "_vertices", tuple(verts))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})
        object.__setattr__(self, "_masks", None)

    @staticmethod
    def _lookup(index, v) -> frozenset:
        if isinstance(v, frozenset) and v in index:
            return v
        try:
            label = frozenset([v])
        except TypeError:
            raise GraphError(f"unknown vertex {v!r}") from None
        if label in index:
            return label
        raise GraphError(f"unknown vertex {v!r}")

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self._vertices, self.edges))

    # -- basic queries -------------------------------------------------

    def vertex(self, v: Hashable) -> frozenset:
        """Resolve a label or bare identifier to the vertex label."""
        return self._lookup(self._index, v)

    def vertex_set(self, vs: Iterable) -> list[frozenset]:
        """Resolve several vertices, preserving the graph's vertex order."""
        labels = {self.vertex(v) for v in vs}
        return [v for v in self._vertices if v in labels]

    def __contains__(self, v) -> bool:
        try:
            self.vertex(v)
        except GraphError:
            return False
        return True

    @property
    def vertices(self) -> tuple[frozenset, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def __len__(self):
        return len(self._vertices)

    def index(self, v) -> int:
        return self._index[self.vertex(v)]

    def neighbors(self, v) -> frozenset:
        return self._adj[self.vertex(v)]

    def degree(self, v) -> int:
        return len(self._adj[self.vertex(v)])

    def has_edge(self, u, v) -> bool:
        return self.vertex(v) in self._adj[self.vertex(u)]

    @property
    def edges(self) -> tuple[tuple[frozenset, frozenset], ...]:
        """Edges as ``(u, v)`` pairs with ``u`` before ``v`` in vertex order."""
        out = []
        for i, u in enumerate(self._vertices):
            for w in self._adj[u]:
                if self._index[w] > i:
                    out.append((u, w))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return tuple(out)

    def edge(self, u, v) -> tuple[frozenset, frozenset]:
        """Resolve an edge to its canonical ``(u, v)`` pair; raise if absent."""
        a, b = self.vertex(u), self.vertex(v)
        if b not in self._adj[a]:
            raise GraphError(f"{format_label(a)}-{format_label(b)} is not an edge")
        return (a, b) if self._index[a] < self._index[b] else (b, a)

    def edge_set(self, edges: Iterable) -> list[tuple[frozenset, frozenset]]:
        out = []
        for e in edges:
            u, v = e
            pair = self.edge(u, v)
            if pair not in out:
                out.append(pair)
        return out

    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks indexed by vertex position."""
        if self._masks is None:
            idx = self._index
            masks = []
            for v in self._vertices:
                mk = 0
                for w in self._adj[v]:
                    mk |= 1 << idx[w]
                masks.append(mk)
            object.__setattr__(self, "_masks", tuple(masks))
        return self._masks

    def key(self) -> tuple:
        """Label-free structural key: equal keys mean identical graphs up to relabeling by position."""
        return (self.n,) + self.masks()

    def induced(self, vs: Iterable) -> "Graph":
        keep = set(self.vertex_set(vs))
        return Graph(
            [v for v in self._vertices if v in keep],
            [(u, w) for u, w in self.edges if u in keep and w in keep],
        )

    def edges_within(self, vs: Iterable) -> int:
        keep = set(self.vertex_set(vs))
        return sum(1 for u, w in self.edges if u in keep and w in keep)

    def is_connected(self) -> bool:
        return self.n == 0 or len(_component_lists(self)) == 1

    def relabel(self, mapping) -> "Graph":
        """New graph with every original identifier ``i`` replaced by ``mapping[i]``."""
        def conv(label):
            return frozenset(mapping[i] for i in label)
        return Graph([conv(v) for v in self._vertices], [(conv(u), conv(w)) for u, w in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, self.edges))

    def __repr__(self):
        vs = " ".join(format_label(v) for v in self._vertices)
        es = " ".join(f"{format_label(u)}-{format_label(w)}" for u, w in self.edges)
        return f"Graph(V=[{vs}], E=[{es}])"

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        """Vertices in order of first appearance, after any explicitly listed ones."""
        order: list = list(vertices)
        seen = set(order)
        edges = list(edges)
        for u, v in edges:
            for w in (u, v):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        return cls(order, edges)


def _component_lists(g: Graph) -> list[list[frozenset]]:
    seen: set = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        idx = {u: i for i, u in enumerate(g.vertices)}
        comp.sort(key=idx.__getitem__)
        comps.append(comp)
    return comps


def components(g: Graph):
    """Partition of ``V(g)`` into connected components."""
    from .partition import SetPartition

    return SetPartition.from_blocks(_component_lists(g), ground=g.vertices)


def _merge_groups(g: Graph, groups: list[list[frozenset]]) -> Graph:
    rep = {}
    for grp in groups:
        label = frozenset().union(*grp)
        for v in grp:
            rep[v] = label
    new_vertices = []
    for v in g.vertices:
        if rep[v] not in new_vertices:
            new_vertices.append(rep[v])
    new_edges = set()
    for u, w in g.edges:
        a, b = rep[u], rep[w]
        if a != b:
            new_edges.add(frozenset((a, b)))
    return Graph(new_vertices, [tuple(e) for e in new_edges])


def contract(g: Graph, edges: Iterable) -> Graph:
    """Contract every edge in ``edges``; parallel edges collapse, loops vanish."""
    f = g.edge_set(edges)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, w in f:
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[rw] = ru
    groups: dict = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return _merge_groups(g, list(groups.values()))


def identify(g: Graph, vs: Iterable) -> Graph:
    """Merge the vertices ``vs`` into one vertex, whether or not they are adjacent."""
    group = g.vertex_set(vs)
    if not group:
        return g
    groups = [group] + [[v] for v in g.vertices if v not in group]
    return _merge_groups(g, groups)


def delete(g: Graph, vertices: Iterable = (), edges: Iterable = ()) -> Graph:
    """Remove ``vertices`` (with incident edges) and ``edges``."""
    drop_v = set(g.vertex_set(vertices))
    drop_e = {frozenset(e) for e in g.edge_set(edges)}
    return Graph(
        [v for v in g.vertices if v not in drop_v],
        [
            (u, w)
            for u, w in g.edges
            if u not in drop_v and w not in drop_v and frozenset((u, w)) not in drop_e
        ],
    )


def bridges(g: Graph) -> list[tuple[frozenset, frozenset]]:
    """Edges whose removal disconnects their endpoints."""
    out = []
    for u, w in g.edges:
        # reachability of w from u avoiding the edge itself
        seen = {u}
        stack = [u]
        found = False
        while stack and not found:
            a = stack.pop()
            for b in g.neighbors(a):
                if a == u and b == w:
                    continue
                if b == w:
                    found = True
                    break
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        if not found:
            out.append((u, w))
    return out


def cliqueify(g: Graph, vs: Iterable) -> Graph:
    """Add every missing edge between vertices of ``vs``."""
    x = g.vertex_set(vs)
    extra = [(x[i], x[j]) for i in range(len(x)) for j in range(i + 1, len(x))]
    return Graph(g.vertices, list(g.edges) + extra)


def extract_matching(g: Graph, matching: Iterable) -> Graph:
    """Remove both endpoints of every edge of a matching."""
    m = g.edge_set(matching)
    ends: list = []
    for u, w in m:
        if u in ends or w in ends:
            raise GraphError(
                f"edge {format_label(u)}-{format_label(w)} shares an endpoint with another matching edge"
            )
        ends += [u, w]
    return delete(g, ends)
