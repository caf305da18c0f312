"""Connectivity-class predicates with verifiable certificates.

Each predicate returns ``(flag, witness)`` where a refuted claim carries
evidence (a kept edge, a kept vertex, an extra path family, or a proper
k-connected subgraph) and a confirmed claim carries an exhaustiveness
attestation. ``classify`` bundles the five flags and asserts the
inclusion hierarchy on the way out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _bits, canon
from .connectivity import CutWitness, PathFamily, _cut_witness_from, local_connectivity
from .core import Edge, Graph, GraphError


@dataclass(frozen=True)
class SubgraphWitness:
    """A proper k-connected subgraph refuting super-minimality."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def validate(self, g: Graph, k: int) -> None:
        vs = set(self.vertices)
        if not vs <= set(range(g.n)):
            raise GraphError("subgraph witness: unknown vertex")
        for e in self.edges:
            if e.u not in vs or e.v not in vs or not g.has_edge(e.u, e.v):
                raise GraphError("subgraph witness: edge not in host graph")
        if len(vs) == g.n and len(self.edges) == g.num_edges:
            raise GraphError("subgraph witness: not a proper subgraph")
        if len(vs) <= k:
            raise GraphError("subgraph witness: too few vertices")
        pos = {v: i for i, v in enumerate(sorted(vs))}
        masks = [0] * len(vs)
        for e in self.edges:
            masks[pos[e.u]] |= 1 << pos[e.v]
            masks[pos[e.v]] |= 1 << pos[e.u]
        if not _bits.is_k_connected_mask(tuple(masks), len(vs), k):
            raise GraphError("subgraph witness: subgraph is not k-connected")


@dataclass(frozen=True)
class ClassLabel:
    k: int
    k_connected: bool
    minimal: bool
    critical: bool
    uniform: bool
    super_minimal: bool

    def check_invariants(self) -> None:
        flags = (self.minimal, self.critical, self.uniform, self.super_minimal)
        if any(flags) and not self.k_connected:
            raise GraphError("class label: flag set on a non-k-connected graph")
        if self.super_minimal and not (self.minimal and self.critical):
            raise GraphError("class label: super-minimal must be minimal and critical")
        if self.k >= 2 and self.uniform and not self.super_minimal:
            raise GraphError("class label: uniform must be super-minimal")


# -- boolean cores (shared by the public predicates and the bulk harness) --


def _k_connected_bool(g: Graph, k: int) -> bool:
    return _bits.is_k_connected_mask(g.masks, g.n, k)


def _destroyed_edges(g: Graph, k: int) -> set[Edge]:
    """Edges whose deletion breaks k-connectivity, assuming g is k-connected.

    An edge deletion leaves a cut of size below k exactly when the edge is
    a bridge of G - S for some vertex set S with fewer than k vertices.
    """
    full = (1 << g.n) - 1
    out: set[Edge] = set()
    for size in range(0, k):
        for sub in combinations(range(g.n), size):
            rem = full & ~_bits.mask_of(sub)
            for (u, v) in _bits.bridges(g.masks, rem):
                out.add(Edge(u, v))
    return out


def _minimal_bool(g: Graph, k: int):
    """(flag, kept edge or None); assumes nothing about g."""
    if not _k_connected_bool(g, k):
        return False, None
    destroyed = _destroyed_edges(g, k)
    for e in g.edges():
        if e not in destroyed:
            return False, e
    return True, None


def _critical_bool(g: Graph, k: int):
    """(flag, kept vertex or None); assumes nothing about g."""
    if not _k_connected_bool(g, k):
        return False, None
    if g.n - 1 <= k:
        return True, None  # every single-vertex deletion fails the order bound
    full = (1 << g.n) - 1
    covered = 0
    for sub in combinations(range(g.n), k):
        m = _bits.mask_of(sub)
        if covered | m == covered:
            continue
        rem = full & ~m
        if not _bits.is_connected_mask(g.masks, rem):
            covered |= m
            if covered == full:
                return True, None
    for v in range(g.n):
        if not (covered >> v) & 1:
            return False, v
    return True, None


def _uniform_bool(g: Graph, k: int):
    """(flag, offending pair or None)."""
    if not _k_connected_bool(g, k):
        return False, None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            count, _ = local_connectivity(g, u, v, cap=k + 1)
            if count != k:
                return False, (u, v)
    return True, None


# -- super-minimality ---------------------------------------------------------

_induced_memo: dict[tuple[bytes, int], bool] = {}


def _peel(masks, nodes: int, k: int) -> int:
    while True:
        drop = 0
        for v in _bits.bits(nodes):
            if (masks[v] & nodes).bit_count() < k:
                drop |= 1 << v
        if not drop:
            return nodes
        nodes &= ~drop


def _induced_search(g: Graph, nodes: int, k: int):
    """A vertex set within `nodes` inducing a k-connected subgraph, or None."""
    nodes = _peel(g.masks, nodes, k)
    if nodes.bit_count() <= k:
        return None
    memo_key = None
    if nodes.bit_count() <= canon.DEFAULT_CAP:
        sub, _ = _induced_graph(g, nodes)
        memo_key = (canon.canonical_key(sub), k)
        hit = _induced_memo.get(memo_key)
        if hit is False:
            return None
        # positive memo entries are not kept: witnesses are label-specific
    cut = _bits.smallest_cut_below(g.masks, g.n, k, nodes)
    if cut is None:
        return nodes
    cut_mask = _bits.mask_of(cut)
    for comp in _bits.components(g.masks, nodes & ~cut_mask):
        found = _induced_search(g, comp | cut_mask, k)
        if found is not None:
            return found
    if memo_key is not None:
        _induced_memo[memo_key] = False
    return None


def _induced_graph(g: Graph, nodes: int):
    vs = list(_bits.bits(nodes))
    pos = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    for v in vs:
        for w in _bits.bits(g.masks[v] & nodes):
            masks[pos[v]] |= 1 << pos[w]
    return Graph(len(vs), tuple(masks)), vs


def contains_k_connected_induced(g: Graph, k: int, forbid_full: bool = False):
    """Vertex set inducing a k-connected subgraph, or None.

    With `forbid_full` the full vertex set is excluded, so the answer is a
    proper induced k-connected subgraph; any such subgraph lives inside
    G - v for some v, which is how the full-set case branches.
    """
    full = (1 << g.n) - 1
    core = _peel(g.masks, full, k)
    if forbid_full and core == full and _bits.is_k_connected_mask(g.masks, g.n, k, core):
        for v in range(g.n):
            found = _induced_search(g, full & ~(1 << v), k)
            if found is not None:
                return frozenset(_bits.bits(found))
        return None
    found = _induced_search(g, full, k)
    if found is None:
        return None
    return frozenset(_bits.bits(found))


# -- public predicates --------------------------------------------------------


def is_k_connected_flag(g: Graph, k: int):
    """Definitional k-connectivity used by the class predicates."""
    if _k_connected_bool(g, k):
        return True, {"order": g.n, "cuts_scanned": f"all below {k}"}
    if g.n <= k:
        return False, "order-bound"
    cut = _bits.smallest_cut_below(g.masks, g.n, k)
    return False, _cut_witness_from(g, cut)


def is_minimally_k_connected(g: Graph, k: int, *, verify_characterization: bool = False):
    """k-connected with every single-edge deletion destroying k-connectivity.

    With `verify_characterization` and k = 3 the Bollobas adjacent-pair
    path count (exactly three internally disjoint paths) is recomputed and
    must agree.
    """
    if not _k_connected_bool(g, k):
        return False, is_k_connected_flag(g, k)[1]
    flag, kept = _minimal_bool(g, k)
    if verify_characterization and k == 3:
        by_paths = all(local_connectivity(g, e.u, e.v, cap=4)[0] == 3
                       for e in g.edges())
        if by_paths != flag:
            raise GraphError("minimality characterization disagreement")
    if flag:
        return True, {"edges_checked": g.num_edges}
    return False, kept


def is_critically_k_connected(g: Graph, k: int):
    if not _k_connected_bool(g, k):
        return False, is_k_connected_flag(g, k)[1]
    flag, kept = _critical_bool(g, k)
    if flag:
        return True, {"vertices_checked": g.n}
    return False, kept


def is_uniformly_k_connected(g: Graph, k: int):
    if not _k_connected_bool(g, k):
        return False, is_k_connected_flag(g, k)[1]
    flag, pair = _uniform_bool(g, k)
    if flag:
        return True, {"pairs_checked": g.n * (g.n - 1) // 2}
    count, family = local_connectivity(g, pair[0], pair[1], cap=k + 1)
    return False, {"pair": pair, "count": count, "paths": family}


def is_super_minimally_k_connected(g: Graph, k: int):
    """k-connected with no proper k-connected subgraph.

    Reduction: a proper k-connected subgraph on the full vertex set forces
    a kept edge (edge monotonicity), and any other one lies inside a
    proper induced subgraph, so minimality plus the induced search decide
    the class.
    """
    minimal, wit = is_minimally_k_connected(g, k)
    if not minimal:
        if isinstance(wit, Edge):
            edges = tuple(e for e in g.edges() if e != wit)
            return False, SubgraphWitness(tuple(range(g.n)), edges)
        return False, wit
    found = contains_k_connected_induced(g, k, forbid_full=True)
    if found is not None:
        sub_edges = tuple(e for e in g.edges()
                          if e.u in found and e.v in found)
        return False, SubgraphWitness(tuple(sorted(found)), sub_edges)
    return True, {"edges_checked": g.num_edges,
                  "induced_search": "exhausted (branch-and-peel)"}


def brute_force_super_minimal_oracle(g: Graph, k: int) -> bool:
    """Definitional oracle: scan every proper subgraph for k-connectivity.

    Independent of the production predicates: plain adjacency sets and a
    from-scratch cut scan. Capped at 8 vertices; test use only.
    """
    if g.n > 8:
        raise GraphError("oracle capped at 8 vertices")

    def kconn(vs: tuple[int, ...], edges: frozenset) -> bool:
        if len(vs) <= k:
            return False
        adj = {v: set() for v in vs}
        for (a, b) in edges:
            adj[a].add(b)
            adj[b].add(a)

        def connected_after(removed) -> bool:
            left = [v for v in vs if v not in removed]
            if not left:
                return True
            seen = {left[0]}
            stack = [left[0]]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in removed and y not in seen:
                        seen.add(y)
                        stack.append(y)
            return len(seen) == len(left)

        for size in range(0, k):
            for rem in combinations(vs, size):
                if not connected_after(set(rem)):
                    return False
        return True

    all_edges = frozenset((e.u, e.v) for e in g.edges())
    if not kconn(tuple(range(g.n)), all_edges):
        return False
    # spanning proper subgraphs first (largest edge sets first), then the
    # vertex-deleted ones; early exit on the first k-connected find
    vertex_sets = [tuple(range(g.n))]
    for size in range(g.n - 1, k, -1):
        vertex_sets.extend(combinations(range(g.n), size))
    for vs in vertex_sets:
        vset = set(vs)
        induced = [e for e in all_edges if e[0] in vset and e[1] in vset]
        top = len(induced) - (1 if len(vs) == g.n else 0)
        for esize in range(top, -1, -1):
            for chosen in combinations(induced, esize):
                if kconn(vs, frozenset(chosen)):
                    return False
    return True


def classify(g: Graph, k: int):
    """All five flags with certificates; label invariants are asserted."""
    kc, kc_wit = is_k_connected_flag(g, k)
    if not kc:
        label = ClassLabel(k, False, False, False, False, False)
        label.check_invariants()
        return label, {"k_connected": kc_wit}
    minimal, min_wit = is_minimally_k_connected(g, k)
    critical, crit_wit = is_critically_k_connected(g, k)
    uniform, uni_wit = is_uniformly_k_connected(g, k)
    sm, sm_wit = is_super_minimally_k_connected(g, k)
    label = ClassLabel(k, True, minimal, critical, uniform, sm)
    label.check_invariants()
    cert = {"k_connected": kc_wit, "minimal": min_wit, "critical": crit_wit,
            "uniform": uni_wit, "super_minimal": sm_wit}
    return label, cert


def validate_certificate(g: Graph, k: int, label: ClassLabel, cert: dict) -> None:
    """Re-validate every negative witness against the definition it refutes."""
    if not label.k_connected and isinstance(cert["k_connected"], CutWitness):
        w = cert["k_connected"]
        w.validate(g)
        if len(w.cut) >= k:
            raise GraphError("cut witness too large for the refuted claim")
        return
    if not label.minimal and isinstance(cert.get("minimal"), Edge):
        e = cert["minimal"]
        from .core import delete_edge
        if not _k_connected_bool(delete_edge(g, e), k):
            raise GraphError("kept-edge witness fails revalidation")
    if not label.critical and isinstance(cert.get("critical"), int):
        v = cert["critical"]
        from .core import delete_vertex
        if not _k_connected_bool(delete_vertex(g, v)[0], k):
            raise GraphError("kept-vertex witness fails revalidation")
    if not label.uniform and isinstance(cert.get("uniform"), dict):
        info = cert["uniform"]
        fam: PathFamily = info["paths"]
        fam.validate(g)
        if len(fam.paths) == k:
            raise GraphError("uniformity witness has exactly k paths")
    if not label.super_minimal and isinstance(cert.get("super_minimal"), SubgraphWitness):
        cert["super_minimal"].validate(g, k)
