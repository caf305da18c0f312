"""Structural graph operations: splitting, contraction, bridging,
enhanced deletion, compatible sets, and cleaving.

Preservation guarantees (bridging keeps 3-connectivity, cleaving keeps
3-connectivity of both parts, the Kriesell implication for enhanced
deletion) are asserted when ``check=True``; passing ``check=False`` turns
the assertions off for bulk runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import _bits
from .canon import are_isomorphic
from .classes import is_super_minimally_k_connected
from .connectivity import is_internally_3_connected
from .core import (Edge, Graph, GraphError, add_edge, build_graph,
                   contract_edge, contract_edges, delete_edge,
                   delete_vertex, _as_edge)
from .generators import complete


class ForestContractionError(RuntimeError):
    """High-degree vertices induced a cycle: a Mader-lemma violation."""


def _is_3_connected(g: Graph) -> bool:
    return _bits.is_k_connected_mask(g.masks, g.n, 3)


def edge_order(g: Graph, e) -> int:
    """Minimum of the two endpoint degrees."""
    e = _as_edge(e)
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e.u}-{e.v} not present")
    return min(g.degree(e.u), g.degree(e.v))


def split_vertex(g: Graph, v: int, part_a, part_b, *, check: bool = True) -> Graph:
    """Split v into adjacent vertices v and g.n along a neighbor partition.

    The old id keeps the part_a neighbors; the new last vertex gets
    part_b. Splitting preserves 3-connectivity, which is asserted when
    the input is 3-connected and `check` is set.
    """
    pa, pb = sorted(set(part_a)), sorted(set(part_b))
    nbrs = set(g.neighbors(v))
    if g.degree(v) < 4:
        raise GraphError("split requires degree at least 4")
    if min(len(pa), len(pb)) < 2:
        raise GraphError("each split side needs at least 2 neighbors")
    if set(pa) | set(pb) != nbrs or set(pa) & set(pb):
        raise GraphError("split sides must partition the neighborhood")
    b = g.n
    edges = [(e.u, e.v) for e in g.edges() if v not in (e.u, e.v)]
    edges += [(v, w) for w in pa]
    edges += [(b, w) for w in pb]
    edges.append((v, b))
    out = build_graph(g.n + 1, edges)
    if check and _is_3_connected(g) and not _is_3_connected(out):
        raise GraphError("vertex splitting failed to preserve 3-connectivity")
    return out


def contract_degree_forest(g: Graph, k: int, *, validate_minimal_critical: bool = False):
    """Contract the subgraph induced by vertices of degree above k.

    That subgraph must be a forest (Mader); a cycle raises
    :class:`ForestContractionError`. Returns the contracted graph, the
    contracted edge list, and the old-to-new vertex mapping.
    """
    high = [v for v in range(g.n) if g.degree(v) > k]
    hset = set(high)
    forest_edges = [e for e in g.edges() if e.u in hset and e.v in hset]
    parent = {v: v for v in high}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in forest_edges:
        ra, rb = find(e.u), find(e.v)
        if ra == rb:
            raise ForestContractionError(
                f"degree->{k} vertices induce a cycle through {e.u}-{e.v}")
        parent[ra] = rb
    if not forest_edges:
        result, mapping = g, {v: v for v in range(g.n)}
    else:
        result, mapping = contract_edges(g, forest_edges)
    if result.num_edges != g.num_edges - len(forest_edges):
        raise GraphError("forest contraction produced parallel edges")
    if validate_minimal_critical and k == 3:
        from .classes import is_critically_k_connected, is_minimally_k_connected
        if not is_minimally_k_connected(result, 3)[0]:
            raise GraphError("contraction lost minimal 3-connectivity")
        if not is_critically_k_connected(result, 3)[0]:
            raise GraphError("contraction lost critical 3-connectivity")
    return result, tuple(forest_edges), mapping


def is_3_contractible(g: Graph, e) -> bool:
    """True when the simplified contraction of e stays 3-connected."""
    e = _as_edge(e)
    if not _is_3_connected(g):
        raise GraphError("3-contractibility is defined on 3-connected graphs")
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e.u}-{e.v} not present")
    contracted, _ = contract_edge(g, e)
    return _is_3_connected(contracted)


# -- bridging ---------------------------------------------------------------


def bridge_vertex_edge(g: Graph, x: int, ab, *, check: bool = True) -> Graph:
    """Subdivide ab with a new vertex (id g.n) and join it to x."""
    ab = _as_edge(ab)
    g._check_vertex(x)
    if x in (ab.u, ab.v):
        raise GraphError("bridging vertex must avoid the edge endpoints")
    if not g.has_edge(ab.u, ab.v):
        raise GraphError(f"edge {ab.u}-{ab.v} not present")
    y = g.n
    h = delete_edge(g, ab)
    edges = [(e.u, e.v) for e in h.edges()] + [(ab.u, y), (y, ab.v), (x, y)]
    out = build_graph(g.n + 1, edges)
    if check and _is_3_connected(g) and not _is_3_connected(out):
        raise GraphError("vertex-to-edge bridging failed to preserve 3-connectivity")
    return out


def bridge_edge_edge(g: Graph, ab, cd, *, check: bool = True) -> Graph:
    """Subdivide ab with x (id g.n) and cd with y (id g.n+1), join x to y.

    The two edges may share an endpoint; they only have to be distinct.
    """
    ab, cd = _as_edge(ab), _as_edge(cd)
    if ab == cd:
        raise GraphError("edge-to-edge bridging needs two distinct edges")
    for e in (ab, cd):
        if not g.has_edge(e.u, e.v):
            raise GraphError(f"edge {e.u}-{e.v} not present")
    x, y = g.n, g.n + 1
    h = delete_edge(delete_edge(g, ab), cd)
    edges = [(e.u, e.v) for e in h.edges()]
    edges += [(ab.u, x), (x, ab.v), (cd.u, y), (y, cd.v), (x, y)]
    out = build_graph(g.n + 2, edges)
    if check and _is_3_connected(g) and not _is_3_connected(out):
        raise GraphError("edge-to-edge bridging failed to preserve 3-connectivity")
    return out


# -- enhanced deletion --------------------------------------------------------


@dataclass(frozen=True)
class EnhancedDeletionOutcome:
    result: Graph
    case: str                       # "i", "ii", or "iii"
    added_edges: tuple[Edge, ...]   # in the input labeling
    removed_vertices: tuple[int, ...]
    mapping: dict[int, int] = field(compare=False)


def enhanced_delete(g: Graph, e, *, check: bool = True) -> EnhancedDeletionOutcome:
    """Delete xy, then suppress endpoints left with two nonadjacent neighbors.

    Each endpoint reduced to exactly two pairwise nonadjacent neighbors is
    removed and its neighbor pair rejoined, processed in ascending id
    order against the current graph. The case tag counts suppressions:
    both (i), one (ii), none (iii). On the operation's defining situations
    this matches the three published cases; when both endpoints qualify
    with overlapping neighbor pairs the sequential reading is used, since
    the plain-deletion fallback provably breaks the Kriesell implication
    (prism, any triangle edge).
    """
    e = _as_edge(e)
    if not _is_3_connected(g):
        raise GraphError("enhanced deletion is defined on 3-connected graphs")
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e.u}-{e.v} not present")
    cur = delete_edge(g, e)
    names = {v: v for v in range(g.n)}  # input id -> current id
    added: list[Edge] = []
    removed: list[int] = []
    for z in (e.u, e.v):
        zz = names[z]
        nbrs = cur.neighbors(zz)
        if len(nbrs) != 2 or cur.has_edge(*nbrs):
            continue
        back = {c: o for o, c in names.items()}
        added.append(Edge(*sorted((back[nbrs[0]], back[nbrs[1]]))))
        removed.append(z)
        cur, m = delete_vertex(cur, zz)
        cur = add_edge(cur, (m[nbrs[0]], m[nbrs[1]]))
        names = {v: m[c] for v, c in names.items() if c in m}
    case = {2: "i", 1: "ii", 0: "iii"}[len(removed)]
    outcome = EnhancedDeletionOutcome(cur, case, tuple(added),
                                      tuple(removed), names)
    if check and not are_isomorphic(g, complete(4)):
        if not is_3_contractible(g, e) and not _is_3_connected(outcome.result):
            raise GraphError("Kriesell implication violated by enhanced deletion")
    return outcome


# -- compatible sets and cleaving --------------------------------------------


@dataclass(frozen=True)
class CompatibleSet:
    """Edges/vertices along which a graph cleaves into two parts.

    kind 1: three edges crossing a 0-separation of the edge-deleted graph.
    kind 2: two edges plus a shared vertex c on a 1-separation boundary.
    kind 3: one edge plus two vertices c, d on a 2-separation boundary.
    `a_ends[i]`/`b_ends[i]` orient edge i into part A / part B;
    `internal_to_a` places the boundary edge cd for kind 3.
    """

    kind: int
    edges: tuple[Edge, ...]
    a_ends: tuple[int, ...]
    b_ends: tuple[int, ...]
    vertices: tuple[int, ...]
    side_a: frozenset[int]
    side_b: frozenset[int]
    internal_to_a: bool = False

    def boundary(self) -> tuple[int, ...]:
        return self.vertices

    def validate(self, g: Graph) -> None:
        expect_edges = {1: 3, 2: 2, 3: 1}[self.kind]
        if len(self.edges) != expect_edges or len(self.vertices) != 3 - expect_edges:
            raise GraphError("compatible set: wrong shape")
        for e, a, b in zip(self.edges, self.a_ends, self.b_ends):
            if {a, b} != {e.u, e.v} or not g.has_edge(e.u, e.v):
                raise GraphError("compatible set: bad edge orientation")
        new_a = tuple(self.a_ends) + self.vertices
        new_b = tuple(self.b_ends) + self.vertices
        if len(set(new_a)) != 3 or len(set(new_b)) != 3:
            raise GraphError("compatible set: attachment vertices collide")
        bound = set(self.vertices)
        if self.side_a & self.side_b != bound:
            raise GraphError("compatible set: sides must overlap in the boundary")
        if self.side_a | self.side_b != set(range(g.n)):
            raise GraphError("compatible set: sides must cover the graph")
        if not set(self.a_ends) <= self.side_a - bound:
            raise GraphError("compatible set: A-endpoints outside part A")
        if not set(self.b_ends) <= self.side_b - bound:
            raise GraphError("compatible set: B-endpoints outside part B")
        removed = set(self.edges)
        amask = _bits.mask_of(self.side_a - bound)
        bmask = _bits.mask_of(self.side_b - bound)
        for e in g.edges():
            if e in removed:
                continue
            em = (1 << e.u) | (1 << e.v)
            if em & amask and em & bmask:
                raise GraphError("compatible set: separation leaks an edge")
        # part degrees of boundary vertices (the cd edge counts for kind 3)
        for c in self.vertices:
            for side_mask, internal in ((amask, self.internal_to_a),
                                        (bmask, not self.internal_to_a)):
                deg = (g.masks[c] & side_mask).bit_count()
                other = [v for v in self.vertices if v != c]
                if other and g.has_edge(c, other[0]) and internal:
                    deg += 1
                if deg < 2:
                    raise GraphError("compatible set: boundary degree below 2")


def _oriented(e: Edge, flip: bool) -> tuple[int, int]:
    return (e.v, e.u) if flip else (e.u, e.v)


def _comp_of(comps, v):
    for i, c in enumerate(comps):
        if (c >> v) & 1:
            return i
    return None


def _assign_components(comps, to_a: set[int], to_b: set[int]):
    """Yield (A-mask, B-mask) over free-component placements, B-heavy first."""
    free = [i for i in range(len(comps)) if i not in to_a and i not in to_b]
    for pick in range(1 << len(free)):
        amask = 0
        bmask = 0
        for i in to_a:
            amask |= comps[i]
        for i in to_b:
            bmask |= comps[i]
        for j, i in enumerate(free):
            if (pick >> j) & 1:
                amask |= comps[i]
            else:
                bmask |= comps[i]
        yield amask, bmask


def find_compatible_set(g: Graph, ab, *, check_super_minimal: bool = True):
    """Search for a compatible set containing ab.

    Returns None when the edge-deleted graph is internally 3-connected
    (then enhanced deletion of ab is the productive move). Search order is
    type 1, then 2, then 3, lexicographic within each type, so results are
    reproducible.
    """
    ab = _as_edge(ab)
    if not g.has_edge(ab.u, ab.v):
        raise GraphError(f"edge {ab.u}-{ab.v} not present")
    if check_super_minimal and not is_super_minimally_k_connected(g, 3)[0]:
        raise GraphError("compatible sets are defined on super-minimally "
                         "3-connected graphs")
    if is_internally_3_connected(delete_edge(g, ab)):
        return None
    other_edges = sorted(e for e in g.edges() if e != ab)

    # type 1: two more edges, a 0-separation of the triple-deleted graph
    for e2, e3 in combinations(other_edges, 2):
        h = delete_edge(delete_edge(delete_edge(g, ab), e2), e3)
        comps = _bits.components(h.masks, (1 << g.n) - 1)
        if len(comps) < 2:
            continue
        for f2 in (False, True):
            for f3 in (False, True):
                a2, b2 = _oriented(e2, f2)
                a3, b3 = _oriented(e3, f3)
                a_ends, b_ends = (ab.u, a2, a3), (ab.v, b2, b3)
                if len(set(a_ends)) != 3 or len(set(b_ends)) != 3:
                    continue
                to_a = {_comp_of(comps, v) for v in a_ends}
                to_b = {_comp_of(comps, v) for v in b_ends}
                if to_a & to_b:
                    continue
                amask, bmask = next(_assign_components(comps, to_a, to_b))
                cs = CompatibleSet(
                    kind=1, edges=(ab, e2, e3), a_ends=a_ends, b_ends=b_ends,
                    vertices=(),
                    side_a=frozenset(_bits.bits(amask)),
                    side_b=frozenset(_bits.bits(bmask)))
                cs.validate(g)
                return cs

    # type 2: one more edge and a cut vertex c of the double-deleted graph
    for e2 in other_edges:
        h = delete_edge(delete_edge(g, ab), e2)
        for c in range(g.n):
            if c in (ab.u, ab.v, e2.u, e2.v):
                continue
            comps = _bits.components(h.masks, ((1 << g.n) - 1) & ~(1 << c))
            if len(comps) < 2:
                continue
            for f2 in (False, True):
                a2, b2 = _oriented(e2, f2)
                a_ends, b_ends = (ab.u, a2), (ab.v, b2)
                if len(set(a_ends)) != 2 or len(set(b_ends)) != 2:
                    continue
                to_a = {_comp_of(comps, v) for v in a_ends}
                to_b = {_comp_of(comps, v) for v in b_ends}
                if to_a & to_b:
                    continue
                for amask, bmask in _assign_components(comps, to_a, to_b):
                    if (h.masks[c] & amask).bit_count() < 2:
                        continue
                    if (h.masks[c] & bmask).bit_count() < 2:
                        continue
                    cs = CompatibleSet(
                        kind=2, edges=(ab, e2), a_ends=a_ends, b_ends=b_ends,
                        vertices=(c,),
                        side_a=frozenset(_bits.bits(amask)) | {c},
                        side_b=frozenset(_bits.bits(bmask)) | {c})
                    cs.validate(g)
                    return cs

    # type 3: two boundary vertices on a 2-separation of the edge-deleted graph
    h = delete_edge(g, ab)
    for c, d in combinations(range(g.n), 2):
        if {c, d} & {ab.u, ab.v}:
            continue
        bound = (1 << c) | (1 << d)
        comps = _bits.components(h.masks, ((1 << g.n) - 1) & ~bound)
        if len(comps) < 2:
            continue
        ca, cb = _comp_of(comps, ab.u), _comp_of(comps, ab.v)
        if ca == cb:
            continue
        cd_edge = h.has_edge(c, d)
        for amask, bmask in _assign_components(comps, {ca}, {cb}):
            for internal_to_a in ((False, True) if cd_edge else (False,)):
                ok = True
                for z in (c, d):
                    da = (h.masks[z] & amask).bit_count()
                    db = (h.masks[z] & bmask).bit_count()
                    if cd_edge:
                        if internal_to_a:
                            da += 1
                        else:
                            db += 1
                    if min(da, db) < 2:
                        ok = False
                        break
                if not ok:
                    continue
                cs = CompatibleSet(
                    kind=3, edges=(ab,), a_ends=(ab.u,), b_ends=(ab.v,),
                    vertices=(c, d),
                    side_a=frozenset(_bits.bits(amask)) | {c, d},
                    side_b=frozenset(_bits.bits(bmask)) | {c, d},
                    internal_to_a=internal_to_a)
                cs.validate(g)
                return cs
    return None


def cleave(g: Graph, s: CompatibleSet, *, check: bool = True) -> tuple[Graph, Graph]:
    """Split g along a compatible set into (G_A, G_B).

    Each part keeps its side's vertices and edges and gains one new last
    vertex adjacent to the three attachment vertices of that side. Both
    parts of a 3-connected input are 3-connected (asserted under `check`).
    """
    s.validate(g)
    removed = set(s.edges)
    cd = None
    if s.kind == 3 and g.has_edge(*s.vertices):
        cd = Edge(*s.vertices)

    def build(side: frozenset[int], attach: tuple[int, ...], take_cd: bool) -> Graph:
        vs = sorted(side)
        pos = {v: i for i, v in enumerate(vs)}
        edges = []
        for e in g.edges():
            if e in removed or e.u not in side or e.v not in side:
                continue
            if cd is not None and e == cd and not take_cd:
                continue
            edges.append((pos[e.u], pos[e.v]))
        new = len(vs)
        edges += [(pos[w], new) for w in attach]
        return build_graph(len(vs) + 1, edges)

    # boundary-internal edges other than cd cannot exist: the boundary has
    # at most two vertices and cd is the only candidate
    ga = build(s.side_a, tuple(s.a_ends) + s.vertices, s.internal_to_a)
    gb = build(s.side_b, tuple(s.b_ends) + s.vertices, not s.internal_to_a)
    if check and _is_3_connected(g):
        if not (_is_3_connected(ga) and _is_3_connected(gb)):
            raise GraphError("cleaving failed to keep both parts 3-connected")
    return ga, gb
