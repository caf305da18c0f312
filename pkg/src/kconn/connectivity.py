"""Vertex connectivity with machine-checkable witnesses.

Local connectivity counts internally disjoint paths via unit-capacity
flow on the split digraph; global k-connectivity scans a dominating pair
set anchored at a minimum-degree vertex. Negative answers come with a
:class:`CutWitness`, positive path queries with a :class:`PathFamily`,
and both re-validate independently of the search that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _bits
from .core import Edge, Graph, GraphError


@dataclass(frozen=True)
class PathFamily:
    """Internally disjoint paths out of `source` into `targets`."""

    source: int
    targets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, *, fan: bool = False) -> None:
        seen_internal: set[int] = set()
        terminals: list[int] = []
        for path in self.paths:
            if len(path) < 2 or path[0] != self.source:
                raise GraphError("path family: bad endpoints")
            if len(set(path)) != len(path):
                raise GraphError("path family: repeated vertex in a path")
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise GraphError(f"path family: {a}-{b} is not an edge")
            if path[-1] not in self.targets:
                raise GraphError("path family: terminal outside target set")
            terminals.append(path[-1])
            for v in path[1:-1]:
                if v in seen_internal:
                    raise GraphError("path family: shared internal vertex")
                seen_internal.add(v)
        internal_bad = seen_internal & set(terminals + [self.source])
        if internal_bad:
            raise GraphError("path family: endpoint used internally")
        if fan:
            if len(set(terminals)) != len(terminals):
                raise GraphError("fan: terminals not distinct")
        else:
            if len(set(self.paths)) != len(self.paths):
                raise GraphError("path family: duplicate path")


@dataclass(frozen=True)
class CutWitness:
    """Vertex cut separating two concrete nonempty sides."""

    cut: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        cut = set(self.cut)
        a, b = set(self.side_a), set(self.side_b)
        if not a or not b or a & b or (a | b) & cut:
            raise GraphError("cut witness: sides must be nonempty and disjoint")
        if (a | b | cut) != set(range(g.n)):
            raise GraphError("cut witness: vertex sets must cover the graph")
        for u in a:
            if g.masks[u] & _bits.mask_of(b):
                raise GraphError("cut witness: edge crosses the cut")


@dataclass(frozen=True)
class Separation:
    """Relaxed k-separation: edge-disjoint parts sharing exactly k vertices."""

    part_a_vertices: frozenset[int]
    part_a_edges: frozenset[Edge]
    part_b_vertices: frozenset[int]
    part_b_edges: frozenset[Edge]
    boundary: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.boundary)

    def validate(self, g: Graph) -> None:
        va, vb = self.part_a_vertices, self.part_b_vertices
        ea, eb = self.part_a_edges, self.part_b_edges
        if va & vb != self.boundary:
            raise GraphError("separation: boundary must be the vertex overlap")
        if va | vb != set(range(g.n)):
            raise GraphError("separation: parts must cover the vertices")
        if ea & eb:
            raise GraphError("separation: parts share an edge")
        if ea | eb != set(g.edges()):
            raise GraphError("separation: parts must cover the edges")
        for es, vs in ((ea, va), (eb, vb)):
            for e in es:
                if e.u not in vs or e.v not in vs:
                    raise GraphError("separation: edge leaves its part")
        k = len(self.boundary)
        if min(len(va), len(vb)) < k + 1:
            raise GraphError("separation: part below minimum order")


def _dominating_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs whose local connectivities attain the global connectivity."""
    v0 = min(range(g.n), key=lambda v: (g.masks[v].bit_count(), v))
    nbrs = g.masks[v0]
    pairs = [(v0, u) for u in range(g.n)
             if u != v0 and not (nbrs >> u) & 1]
    nb = list(_bits.bits(nbrs))
    for i, a in enumerate(nb):
        for b in nb[i + 1:]:
            if not (g.masks[a] >> b) & 1:
                pairs.append((a, b))
    return pairs


def _cut_witness_from(g: Graph, cut: tuple[int, ...]) -> CutWitness:
    nodes = ((1 << g.n) - 1) & ~_bits.mask_of(cut)
    comp = _bits.component_mask(g.masks, nodes, nodes & -nodes)
    return CutWitness(cut=tuple(cut),
                      side_a=tuple(_bits.bits(comp)),
                      side_b=tuple(_bits.bits(nodes & ~comp)))


def is_k_connected(g: Graph, k: int):
    """Decide k-connectivity; on failure return a minimum cut witness.

    Returns ``(bool, witness)`` where the witness is a :class:`CutWitness`
    for a refuted claim and a statement string otherwise ("complete",
    "order-bound", or the number of pair flows checked).
    """
    if k < 1:
        raise GraphError("k must be positive")
    if g.n <= k:
        return False, "order-bound"
    pairs = _dominating_pairs(g)
    if not pairs:
        return True, "complete"
    best_value = None
    best_state = None
    for (u, v) in pairs:
        if (g.masks[u] >> v) & 1:
            continue  # adjacent pairs cannot witness a cut
        st = _bits.max_disjoint_paths(g.masks, g.n, u, v, k)
        if best_value is None or st.value < best_value:
            best_value, best_state = st.value, st
            if best_value == 0:
                break
    if best_value is None or best_value >= k:
        return True, f"pair-flows-checked:{len(pairs)}"
    return False, _cut_witness_from(g, best_state.cut_vertices())


def local_connectivity(g: Graph, u: int, v: int, cap: int | None = None):
    """Maximum internally disjoint u-v paths with a realizing family.

    An adjacent pair contributes the edge itself as one path. With `cap`
    the search stops early and the count is ``min(true value, cap)``.
    """
    if u == v:
        raise GraphError("local connectivity needs distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    adjacent = g.has_edge(u, v)
    limit = g.n if cap is None else cap
    flow_cap = max(0, limit - 1) if adjacent else limit
    st = _bits.max_disjoint_paths(g.masks, g.n, u, v, flow_cap,
                                  skip_edge=(u, v) if adjacent else None)
    paths = st.paths()
    if adjacent:
        paths = [(u, v)] + paths
    count = st.value + (1 if adjacent else 0)
    family = PathFamily(source=u, targets=(v,),
                        paths=tuple(tuple(p) for p in paths))
    return count, family


def find_fan(g: Graph, x: int, targets, k: int):
    """A k-fan from x into the target set, or None when no fan exists."""
    tset = sorted(set(targets))
    if x in tset:
        raise GraphError("fan source inside the target set")
    for t in tset:
        g._check_vertex(t)
    if len(tset) < k:
        return None
    st = _bits.max_fan(g.masks, g.n, x, _bits.mask_of(tset), k)
    if st.value < k:
        return None
    return PathFamily(source=x, targets=tuple(tset),
                      paths=tuple(tuple(p) for p in st.paths()))


def _components_outside(g: Graph, boundary_mask: int) -> list[int]:
    nodes = ((1 << g.n) - 1) & ~boundary_mask
    return _bits.components(g.masks, nodes)


def _build_separation(g: Graph, boundary: tuple[int, ...],
                      side_a_comps: list[int], side_b_comps: list[int],
                      internal_to_a: bool = False) -> Separation:
    bound = _bits.mask_of(boundary)
    amask = bound
    for c in side_a_comps:
        amask |= c
    bmask = bound
    for c in side_b_comps:
        bmask |= c
    ea, eb = set(), set()
    for e in g.edges():
        em = (1 << e.u) | (1 << e.v)
        if em & ~bound == 0:        # boundary-internal edge
            (ea if internal_to_a else eb).add(e)
        elif em & ~amask == 0:
            ea.add(e)
        else:
            eb.add(e)
    return Separation(part_a_vertices=frozenset(_bits.bits(amask)),
                      part_a_edges=frozenset(ea),
                      part_b_vertices=frozenset(_bits.bits(bmask)),
                      part_b_edges=frozenset(eb),
                      boundary=frozenset(boundary))


def find_separation(g: Graph, k: int, boundary=None):
    """A relaxed k-separation, or None when none exists.

    Without an explicit boundary the lexicographically first size-k cut is
    used; the part holding the smallest non-boundary vertex becomes part A
    and boundary-internal edges go to part B (matching the convention used
    throughout for reproducible outputs).
    """
    if boundary is not None:
        cands = [tuple(sorted(boundary))]
        if len(cands[0]) != k:
            raise GraphError("explicit boundary has the wrong size")
    else:
        cands = combinations(range(g.n), k)
    for cut in cands:
        bmask = _bits.mask_of(cut)
        comps = _components_outside(g, bmask)
        if len(comps) < 2:
            continue
        return _build_separation(g, cut, [comps[0]], comps[1:])
    return None


def is_internally_3_connected(g: Graph) -> bool:
    """2-connected, at least 4 vertices, every 2-separation has a P3 part."""
    if g.n < 4:
        return False
    ok, _ = is_k_connected(g, 2)
    if not ok:
        return False
    full = (1 << g.n) - 1
    for a in range(g.n):
        for b in range(a + 1, g.n):
            rem = full & ~(1 << a) & ~(1 << b)
            comps = _bits.components(g.masks, rem)
            if len(comps) < 2:
                continue
            ab_edge = bool((g.masks[a] >> b) & 1)
            singles = sum(1 for c in comps if c.bit_count() == 1)
            if len(comps) >= 4:
                return False
            if len(comps) == 3:
                if ab_edge or singles < 3:
                    return False
            else:
                if ab_edge and singles < 2:
                    return False
                if not ab_edge and singles < 1:
                    return False
    return True
