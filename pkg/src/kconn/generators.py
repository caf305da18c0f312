"""Constructors for the named graph families.

Vertex numbering is deterministic and documented per family; hub and apex
vertices always come last so rim/path vertices keep low ids.
"""

from __future__ import annotations

from .core import Graph, GraphError, build_graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite sides must be nonempty")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(spokes: int) -> Graph:
    """Cycle 0..spokes-1 plus the hub as the last vertex."""
    if spokes < 3:
        raise GraphError("wheel needs at least 3 spokes")
    edges = [(i, (i + 1) % spokes) for i in range(spokes)]
    edges += [(i, spokes) for i in range(spokes)]
    return build_graph(spokes + 1, edges)


def theta(*lengths: int) -> Graph:
    """Two branch vertices joined by internally disjoint paths.

    Path i has `lengths[i]` edges; internal path vertices are numbered
    first (path by path), the two branch vertices come last (u = N-2,
    v = N-1). At most one length may be 1, else a multi-edge would form.
    """
    if len(lengths) < 2:
        raise GraphError("theta needs at least 2 paths")
    if any(l < 1 for l in lengths):
        raise GraphError("theta path lengths must be positive")
    if sum(1 for l in lengths if l == 1) > 1:
        raise GraphError("at most one theta path may have length 1")
    n_internal = sum(l - 1 for l in lengths)
    u, v = n_internal, n_internal + 1
    edges = []
    nxt = 0
    for l in lengths:
        prev = u
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return build_graph(n_internal + 2, edges)


def _theta_degree2(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 2]


def dim_wheel(*lengths: int) -> Graph:
    """Theta plus a hub (last vertex) adjacent to its degree-2 vertices."""
    base = theta(*lengths)
    hub = base.n
    edges = [(e.u, e.v) for e in base.edges()]
    edges += [(w, hub) for w in _theta_degree2(base)]
    return build_graph(base.n + 1, edges)


def aug_dim_wheel(*lengths: int) -> Graph:
    """Theta plus an apex (last vertex) adjacent to every theta vertex."""
    base = theta(*lengths)
    apex = base.n
    edges = [(e.u, e.v) for e in base.edges()]
    edges += [(w, apex) for w in range(base.n)]
    return build_graph(base.n + 1, edges)


def alt_double_wheel(n: int) -> Graph:
    """2n-cycle 0..2n-1 plus apexes x = 2n on even rim, y = 2n+1 on odd rim.

    Rim vertex i stands for the paper-style label v_{i+1}, so x sits on
    the odd labels and y on the even ones.
    """
    if n < 2:
        raise GraphError("alternating double wheel needs n >= 2")
    rim = 2 * n
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(0, rim, 2)]
    edges += [(i, rim + 1) for i in range(1, rim, 2)]
    return build_graph(rim + 2, edges)


def kn_minus_cn(n: int) -> Graph:
    """Complete graph minus the Hamiltonian cycle 0-1-...-(n-1)-0."""
    if n < 4:
        raise GraphError("kn_minus_cn needs n >= 4")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if j - i != 1 and not (i == 0 and j == n - 1)]
    return build_graph(n, edges)


def kn_minus_pn(n: int) -> Graph:
    """Complete graph minus the Hamiltonian path 0-1-...-(n-1)."""
    if n < 2:
        raise GraphError("kn_minus_pn needs n >= 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if j - i != 1]
    return build_graph(n, edges)


def q_graph(n: int) -> Graph:
    """kn_minus_cn(n) plus two nonadjacent apexes x = n, y = n+1 joined to all."""
    if n < 4:
        raise GraphError("q needs n >= 4")
    base = kn_minus_cn(n)
    edges = [(e.u, e.v) for e in base.edges()]
    edges += [(i, n) for i in range(n)]
    edges += [(i, n + 1) for i in range(n)]
    return build_graph(n + 2, edges)


_FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "wheel": (wheel, 1),
    "theta": (theta, None),
    "dim_wheel": (dim_wheel, None),
    "aug_dim_wheel": (aug_dim_wheel, None),
    "alt_double_wheel": (alt_double_wheel, 1),
    "kn_minus_cn": (kn_minus_cn, 1),
    "kn_minus_pn": (kn_minus_pn, 1),
    "q": (q_graph, 1),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def generate(family: str, *params: int) -> Graph:
    """Build a named family member; see `family_names` for the catalogue."""
    if family not in _FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    if arity is not None and len(params) != arity:
        raise GraphError(f"{family} expects {arity} parameter(s)")
    return fn(*params)
