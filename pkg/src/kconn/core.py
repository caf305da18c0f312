"""Immutable simple-graph value type and structural edits.

A :class:`Graph` is a finite simple undirected graph on vertices
``0..n-1`` with sorted adjacency. Every edit returns a new graph; edits
that renumber vertices (deletion, contraction) also return the old-to-new
id mapping so witnesses can be translated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _bits


class GraphError(ValueError):
    """Structural violation: bad vertex id, loop, or missing/duplicate edge."""


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge, normalized so that u < v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise GraphError(f"loop edge at vertex {self.u}")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def __iter__(self):
        return iter((self.u, self.v))


def _as_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    u, v = e
    return Edge(int(u), int(v))


class Graph:
    """Immutable simple graph with contiguous vertex ids.

    Adjacency is held as per-vertex bitmasks; use :func:`build_graph` to
    construct one with validation.
    """

    __slots__ = ("n", "masks", "_hash")

    def __init__(self, n: int, masks: tuple[int, ...]):
        self.n = n
        self.masks = masks
        self._hash = hash((n, masks))

    # -- views ------------------------------------------------------------

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_bits.bits(m)) for m in self.masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits.bits(self.masks[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.masks[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.masks[u] >> v) & 1)

    def edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            m = self.masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield Edge(u, v)
                m >>= 1
                v += 1

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.n == other.n and self.masks == other.masks)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        pairs = [(e.u, e.v) for e in self.edges()]
        return f"Graph(n={self.n}, edges={pairs})"

    def __reduce__(self):
        return (Graph, (self.n, self.masks))

    def check_invariants(self) -> None:
        """Debug validator for the four structural invariants."""
        if self.n < 0 or len(self.masks) != self.n:
            raise GraphError("adjacency length disagrees with order")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if (m >> v) & 1:
                raise GraphError(f"loop at {v}")
            if m & ~full:
                raise GraphError(f"neighbor id out of range at {v}")
            for w in _bits.bits(m):
                if not (self.masks[w] >> v) & 1:
                    raise GraphError(f"asymmetric edge {v}-{w}")


def build_graph(n: int, edges: Iterable) -> Graph:
    """Build a graph on `n` vertices; duplicate edges collapse silently."""
    if n < 0:
        raise GraphError("negative order")
    masks = [0] * n
    for e in edges:
        u, v = _as_edge(e)
        if v >= n:
            raise GraphError(f"endpoint {v} out of range for order {n}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_masks(n: int, masks) -> Graph:
    """Trusted constructor for internal callers holding valid masks."""
    return Graph(n, tuple(masks))


# -- structural edits -------------------------------------------------------


def add_edge(g: Graph, e) -> Graph:
    u, v = _as_edge(e)
    if g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} already present")
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph(g.n, tuple(masks))


def delete_edge(g: Graph, e) -> Graph:
    u, v = _as_edge(e)
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not present")
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def _quotient(g: Graph, groups: list[list[int]]) -> tuple[Graph, dict[int, int]]:
    """Merge each vertex group to one vertex; drops loops and parallels.

    Groups are merged in the order given; remaining vertices keep their
    relative order after them being removed. Returns the new graph and the
    old->new id mapping.
    """
    rep: dict[int, int] = {}
    ordered: list[list[int]] = []
    for grp in groups:
        ordered.append(sorted(grp))
    singles = [v for v in range(g.n) if not any(v in grp for grp in ordered)]
    classes = sorted(ordered + [[v] for v in singles], key=lambda c: c[0])
    mapping: dict[int, int] = {}
    for new_id, cls in enumerate(classes):
        for v in cls:
            mapping[v] = new_id
    m = len(classes)
    masks = [0] * m
    for e in g.edges():
        a, b = mapping[e.u], mapping[e.v]
        if a != b:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return Graph(m, tuple(masks)), mapping


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove `v` and renumber; the deleted vertex is absent from the map."""
    g._check_vertex(v)
    keep = [u for u in range(g.n) if u != v]
    mapping = {u: i for i, u in enumerate(keep)}
    masks = [0] * (g.n - 1)
    for u in keep:
        nm = 0
        for w in _bits.bits(g.masks[u] & ~(1 << v)):
            nm |= 1 << mapping[w]
        masks[mapping[u]] = nm
    return Graph(g.n - 1, tuple(masks)), mapping


def contract_edge(g: Graph, e) -> tuple[Graph, dict[int, int]]:
    """Identify the endpoints of `e`; the result is simplified."""
    u, v = _as_edge(e)
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not present")
    return _quotient(g, [[u, v]])


def contract_edges(g: Graph, edges) -> tuple[Graph, dict[int, int]]:
    """Contract a set of edges at once (used for forest contraction)."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = _as_edge(e)
        if not g.has_edge(a, b):
            raise GraphError(f"edge {a}-{b} not present")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return _quotient(g, [grp for grp in groups.values() if len(grp) > 1])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on `vertices` plus the new->old id mapping."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    for v in vs:
        nm = 0
        for w in _bits.bits(g.masks[v]):
            if w in pos:
                nm |= 1 << pos[w]
        masks[pos[v]] = nm
    return Graph(len(vs), tuple(masks)), {i: v for i, v in enumerate(vs)}


def neighborhood(g: Graph, s: Iterable[int], closed: bool = False) -> frozenset[int]:
    """Open neighborhood N(S) (union of neighbors minus S) or closed N[S]."""
    sset = set(s)
    m = 0
    for v in sset:
        g._check_vertex(v)
        m |= g.masks[v]
    smask = _bits.mask_of(sset)
    out = (m | smask) if closed else (m & ~smask)
    return frozenset(_bits.bits(out))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _bits.is_connected_mask(g.masks, (1 << g.n) - 1)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    masks = list(g.masks) + [m << g.n for m in h.masks]
    return Graph(g.n + h.n, tuple(masks))
