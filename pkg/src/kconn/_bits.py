"""Low-level bitmask graph routines shared across the package.

A graph lives here as a tuple of neighbor masks: vertex ``v`` is bit
position ``v`` and ``masks[v]`` is the bitset of its neighbors. All
functions are pure and allocation-light; the public modules wrap them
with typed interfaces and certificates.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_mask(masks, nodes: int, start: int) -> int:
    """Bitset of the connected component of `start` inside `nodes`."""
    comp = start & nodes
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & nodes & ~comp
        comp |= frontier
    return comp


def is_connected_mask(masks, nodes: int) -> bool:
    """True when the induced subgraph on `nodes` is connected (or empty)."""
    if nodes == 0:
        return True
    return component_mask(masks, nodes, nodes & -nodes) == nodes


def components(masks, nodes: int) -> list[int]:
    out = []
    rest = nodes
    while rest:
        comp = component_mask(masks, rest, rest & -rest)
        out.append(comp)
        rest &= ~comp
    return out


def degree_in(masks, v: int, nodes: int) -> int:
    return (masks[v] & nodes).bit_count()


def smallest_cut_below(masks, n: int, k: int, nodes: int | None = None):
    """Lexicographically first vertex cut of size < k inside `nodes`, or None.

    Subsets are scanned by increasing size, so the first hit is a minimum
    cut. A "cut" here means removing it disconnects the (remaining) graph;
    an already-disconnected graph yields the empty cut.
    """
    if nodes is None:
        nodes = (1 << n) - 1
    verts = [v for v in bits(nodes)]
    for size in range(0, k):
        if size > len(verts):
            break
        for sub in combinations(verts, size):
            rem = nodes & ~mask_of(sub)
            if rem and not is_connected_mask(masks, rem):
                return sub
    return None


def is_k_connected_mask(masks, n: int, k: int, nodes: int | None = None) -> bool:
    """Definitional check: more than k vertices and no cut of size < k."""
    if nodes is None:
        nodes = (1 << n) - 1
    if nodes.bit_count() <= k:
        return False
    return smallest_cut_below(masks, n, k, nodes) is None


def bridges(masks, nodes: int) -> list[tuple[int, int]]:
    """Bridges of the induced subgraph on `nodes` (iterative lowpoint DFS)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[tuple[int, int]] = []
    timer = 0
    for root in bits(nodes):
        if root in disc:
            continue
        stack = [(root, -1, iter(bits(masks[root] & nodes)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(bits(masks[w] & nodes))))
                    advanced = True
                    break
                elif w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                # a parallel edge cannot occur in a simple graph, so a
                # single parent skip is enough
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        out.append((min(p, v), max(p, v)))
    return out


def all_cycles(masks, n: int) -> Iterator[tuple[int, ...]]:
    """Every simple cycle, once, as a vertex tuple rooted at its minimum.

    The orientation is fixed by requiring the second vertex to be smaller
    than the last, so each cycle appears exactly once.
    """
    for b in range(n):
        allowed = 0
        for v in range(b + 1, n):
            allowed |= 1 << v
        # DFS over simple paths b -> ... within `allowed`
        start_nbrs = [x for x in bits(masks[b] & allowed)]
        for x in start_nbrs:
            stack = [([b, x], (1 << b) | (1 << x))]
            while stack:
                path, used = stack.pop()
                v = path[-1]
                for w in bits(masks[v] & allowed & ~used):
                    stack.append((path + [w], used | (1 << w)))
                if len(path) >= 3 and (masks[v] >> b) & 1 and path[1] < path[-1]:
                    yield tuple(path)


# -- unit-capacity vertex-disjoint flow on the split digraph ---------------
#
# Node ids: in(v) = 2v, out(v) = 2v+1. Internal arcs in(v)->out(v) carry
# capacity one except at the terminals; each undirected edge vw becomes the
# two arcs out(v)->in(w) and out(w)->in(v).


class FlowState:
    """Mutable residual state for one max-flow computation."""

    __slots__ = ("masks", "n", "source", "sink", "edge_flow", "through",
                 "targets", "used_targets", "value", "skip_edge", "no_pass")

    def __init__(self, masks, n, source, sink, *, targets=0, skip_edge=None,
                 no_pass=0):
        self.masks = masks
        self.n = n
        self.source = source          # vertex id (acts as out-node)
        self.sink = sink              # vertex id, or -1 when targets used
        self.targets = targets        # bitset of fan targets (sink == -1)
        self.used_targets = 0         # fan targets already serving as terminals
        self.edge_flow: set[tuple[int, int]] = set()  # directed used arcs (v, w)
        self.through = 0              # vertices with saturated internal arc
        self.value = 0
        self.skip_edge = skip_edge    # undirected edge excluded from the graph
        self.no_pass = targets        # fan targets cannot be passed through

    def _edge_ok(self, v, w):
        if self.skip_edge is not None:
            a, b = self.skip_edge
            if (v == a and w == b) or (v == b and w == a):
                return False
        return True

    def augment(self) -> bool:
        """One shortest augmenting path; returns False when none exists."""
        n = self.n
        # BFS states: even id 2v = "at in(v)", odd 2v+1 = "at out(v)"
        src = 2 * self.source + 1
        prev = {src: -1}
        queue = [src]
        found = -1
        while queue and found < 0:
            nxt: list[int] = []
            for node in queue:
                v, is_out = node >> 1, node & 1
                if is_out:
                    # forward edge arcs out(v) -> in(w)
                    for w in bits(self.masks[v]):
                        if not self._edge_ok(v, w):
                            continue
                        if (v, w) in self.edge_flow:
                            continue
                        # arc into a saturated pair (w,v) is the residual
                        # cancel; that is handled from in-nodes below
                        tgt = 2 * w
                        if tgt not in prev:
                            prev[tgt] = node
                            if w == self.sink or (
                                    (self.targets >> w) & 1
                                    and not (self.used_targets >> w) & 1):
                                found = tgt
                                break
                            nxt.append(tgt)
                    # residual of internal arc: out(v) -> in(v) when saturated
                    if (self.through >> v) & 1:
                        tgt = 2 * v
                        if tgt not in prev:
                            prev[tgt] = node
                            nxt.append(tgt)
                else:
                    # internal arc in(v) -> out(v)
                    if not (self.through >> v) & 1 and not (self.no_pass >> v) & 1:
                        tgt = node + 1
                        if tgt not in prev:
                            prev[tgt] = node
                            nxt.append(tgt)
                    # residual of edge arcs: in(v) -> out(w) for used (w, v)
                    for w in bits(self.masks[v]):
                        if (w, v) in self.edge_flow:
                            tgt = 2 * w + 1
                            if tgt not in prev:
                                prev[tgt] = node
                                nxt.append(tgt)
                if found >= 0:
                    break
            queue = nxt
        if found < 0:
            return False
        # walk back, toggling residual usage
        if self.targets:
            self.used_targets |= 1 << (found >> 1)
        node = found
        while node != src:
            p = prev[node]
            pv, p_out = p >> 1, p & 1
            nv, n_out = node >> 1, node & 1
            if p_out and not n_out and pv != nv:
                self.edge_flow.add((pv, nv))
            elif p_out and not n_out:      # out(v) -> in(v) residual cancel
                self.through &= ~(1 << pv)
            elif not p_out and n_out and pv == nv:
                self.through |= 1 << pv
            else:                          # in(v) -> out(w) cancel of (w, v)
                self.edge_flow.discard((nv, pv))
            node = p
        self.value += 1
        return True

    def run(self, cap: int) -> int:
        while self.value < cap and self.augment():
            pass
        return self.value

    def reachable(self) -> set[int]:
        """Split-digraph nodes reachable from the source in the residual."""
        src = 2 * self.source + 1
        seen = {src}
        queue = [src]
        while queue:
            node = queue.pop()
            v, is_out = node >> 1, node & 1
            if is_out:
                for w in bits(self.masks[v]):
                    if self._edge_ok(v, w) and (v, w) not in self.edge_flow:
                        t = 2 * w
                        if t not in seen:
                            seen.add(t)
                            queue.append(t)
                if (self.through >> v) & 1 and 2 * v not in seen:
                    seen.add(2 * v)
                    queue.append(2 * v)
            else:
                if not (self.through >> v) & 1 and not (self.no_pass >> v) & 1:
                    if node + 1 not in seen:
                        seen.add(node + 1)
                        queue.append(node + 1)
                for w in bits(self.masks[v]):
                    if (w, v) in self.edge_flow and 2 * w + 1 not in seen:
                        seen.add(2 * w + 1)
                        queue.append(2 * w + 1)
        return seen

    def cut_vertices(self) -> tuple[int, ...]:
        """A minimum vertex cut realizing the current (maximum) flow value.

        Edge arcs carry capacity one here, so the residual boundary may be
        crossed by saturated edge arcs as well as internal arcs; a crossing
        edge arc contributes its head (its tail when the head is the sink,
        which keeps the sink out of the cut). Only meaningful for a
        nonadjacent source/sink pair at maximum flow.
        """
        seen = self.reachable()
        cut = {v for v in range(self.n)
               if 2 * v in seen and 2 * v + 1 not in seen}
        for (u, w) in self.edge_flow:
            if 2 * u + 1 in seen and 2 * w not in seen:
                cut.add(u if w == self.sink else w)
        return tuple(sorted(cut))

    def paths(self) -> list[tuple[int, ...]]:
        """Decompose the flow into vertex paths from the source."""
        succ: dict[int, list[int]] = {}
        for (v, w) in sorted(self.edge_flow):
            succ.setdefault(v, []).append(w)
        for v in succ:
            succ[v].sort()
        out = []
        for _ in range(self.value):
            path = [self.source]
            v = self.source
            while True:
                w = succ[v].pop(0)
                path.append(w)
                if w == self.sink or (self.targets >> w) & 1:
                    break
                v = w
            out.append(tuple(path))
        return out


def max_disjoint_paths(masks, n, s, t, cap, *, skip_edge=None) -> FlowState:
    st = FlowState(masks, n, s, t, skip_edge=skip_edge)
    st.run(cap)
    return st


def max_fan(masks, n, x, targets_mask, cap) -> FlowState:
    st = FlowState(masks, n, x, -1, targets=targets_mask)
    st.run(cap)
    return st
