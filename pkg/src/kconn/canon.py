"""Canonical keys for isomorph deduplication.

Color refinement followed by individualization backtracking; the key is
the graph6 encoding of the lexicographically minimal relabeled adjacency
(upper-triangle bit order). Keys of two graphs are equal exactly when the
graphs are isomorphic. Intended for desk-scale orders; the cap is
asserted, not silent.
"""

from __future__ import annotations

from .core import Graph
from .graph6 import encode_graph6
from . import _bits

DEFAULT_CAP = 12


class OrderCapExceeded(ValueError):
    pass


def _refine(nbrs, n, colors, ncolors):
    """Iterated neighborhood color refinement; returns a stable coloring.

    Classes only split, so the refinement is stable as soon as a round
    keeps the class count.
    """
    while ncolors < n:
        sigs = [(colors[v], *sorted([colors[w] for w in nbrs[v]]))
                for v in range(n)]
        order = sorted(set(sigs))
        remap = {s: i for i, s in enumerate(order)}
        stable = len(order) == ncolors
        colors = [remap[s] for s in sigs]
        ncolors = len(order)
        if stable:
            break
    return colors, ncolors


def _encode_tri(masks, order):
    """Upper-triangle bit integer of the graph relabeled by `order`."""
    n = len(order)
    acc = 0
    for col in range(1, n):
        mc = masks[order[col]]
        for row in range(col):
            acc = (acc << 1) | ((mc >> order[row]) & 1)
    return acc


def _swap_is_automorphism(masks, u, w):
    """True when transposing u and w preserves adjacency."""
    diff = (masks[u] ^ masks[w]) & ~(1 << u) & ~(1 << w)
    return diff == 0


def _search(masks, nbrs, n, colors, ncolors, best):
    colors, ncolors = _refine(nbrs, n, colors, ncolors)
    if ncolors == n:
        order = sorted(range(n), key=colors.__getitem__)
        enc = _encode_tri(masks, order)
        if best[0] is None or enc < best[0]:
            best[0] = enc
            best[1] = order
        return
    target_color = None
    cell: list[int] = []
    for c in sorted(set(colors)):
        members = [v for v in range(n) if colors[v] == c]
        if len(members) > 1:
            target_color, cell = c, members
            break
    tried: list[int] = []
    for v in cell:
        if any(_swap_is_automorphism(masks, v, u) for u in tried):
            continue
        tried.append(v)
        branched = list(colors)
        branched[v] = n  # fresh maximal color; refinement renumbers
        _search(masks, nbrs, n, branched, ncolors + 1, best)


def canonical_order(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """A vertex order realizing the canonical (minimal) adjacency encoding."""
    if g.n > cap:
        raise OrderCapExceeded(f"order {g.n} above canonical cap {cap}")
    if g.n == 0:
        return []
    masks = g.masks
    nbrs = tuple(tuple(_bits.bits(m)) for m in masks)
    best: list = [None, None]
    _search(masks, nbrs, g.n, [0] * g.n, 1, best)
    return best[1]


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    masks = [0] * g.n
    for v in range(g.n):
        nm = 0
        for w in _bits.bits(g.masks[v]):
            nm |= 1 << perm[w]
        masks[perm[v]] = nm
    return Graph(g.n, tuple(masks))


def canonical_form(g: Graph, cap: int = DEFAULT_CAP) -> Graph:
    order = canonical_order(g, cap)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(g, perm)


def canonical_key(g: Graph, cap: int = DEFAULT_CAP) -> bytes:
    """Byte key equal for two graphs iff they are isomorphic."""
    return encode_graph6(canonical_form(g, cap))


def are_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_key(g, cap) == canonical_key(h, cap)
