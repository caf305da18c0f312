"""Isomorph-free small-graph enumeration and the verification jobs.

The internal enumerator grows connected graphs one vertex at a time with
canonical-key deduplication per level; degree floors and edge caps prune
levels that cannot reach the requested population. Jobs classify a
population, check the published bounds and structure lemmas against it,
and produce deterministic reports whose violations re-validate
independently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from . import _bits, canon
from .classes import (_critical_bool, _k_connected_bool, _minimal_bool,
                      _uniform_bool, classify, contains_k_connected_induced,
                      is_super_minimally_k_connected)
from .connectivity import local_connectivity
from .core import Graph, GraphError, build_graph, disjoint_union
from .generators import complete_bipartite, wheel
from .graph6 import decode_graph6, encode_graph6, iter_graph6

INTERNAL_ORDER_CAP = 10


# -- internal enumeration -----------------------------------------------------

_POP_CACHE: dict[tuple, tuple[Graph, ...]] = {}


def _grow_level(parents, level, floor, cap):
    """All connected graphs on `level` vertices reachable from `parents`."""
    out: dict[bytes, Graph] = {}
    need = max(1, floor)
    for parent in parents:
        if cap is not None and parent.num_edges + need > cap:
            continue
        forced = 0
        for v in range(parent.n):
            if parent.degree(v) < floor:
                forced |= 1 << v
        rest = [v for v in range(parent.n) if not (forced >> v) & 1]
        base = forced.bit_count()
        for extra in range(max(0, need - base), len(rest) + 1):
            if cap is not None and parent.num_edges + base + extra > cap:
                break
            for pick in combinations(rest, extra):
                sub = forced | _bits.mask_of(pick)
                if sub == 0:
                    continue
                masks = list(parent.masks) + [sub]
                for w in _bits.bits(sub):
                    masks[w] |= 1 << parent.n
                g = Graph(parent.n + 1, tuple(masks))
                key = canon.canonical_key(g)
                if key not in out:
                    out[key] = g
    return [out[k] for k in sorted(out)]


def connected_graphs(n: int, min_degree: int = 0,
                     max_edges: int | None = None) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs.

    Grown vertex by vertex: a graph qualifies at level j when its minimum
    degree is at least ``min_degree - (n - j)``, since each later vertex
    raises a degree by at most one; every target graph survives the
    reverse peeling of non-cut vertices, so the growth is exhaustive.
    """
    if n < 1:
        return ()
    if n > INTERNAL_ORDER_CAP:
        raise GraphError(f"internal enumeration capped at {INTERNAL_ORDER_CAP}")
    key = (n, min_degree, max_edges)
    if key in _POP_CACHE:
        return _POP_CACHE[key]
    floors = [max(0, min_degree - (n - j)) for j in range(n + 1)]
    caps = [None] * (n + 1)
    if max_edges is not None:
        need_after = 0
        caps[n] = max_edges
        for j in range(n - 1, 0, -1):
            need_after += max(1, floors[j + 1])
            caps[j] = max_edges - need_after
    level = [Graph(1, (0,))]
    for j in range(2, n + 1):
        level = _grow_level(level, j, floors[j], caps[j])
    if n == 1:
        pop = tuple(level)
    else:
        pop = tuple(g for g in level)
    _POP_CACHE[key] = pop
    return pop


def graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """Every graph on n vertices up to isomorphism, disconnected included.

    Assembled as multisets of connected classes, so no extra canonical
    work is needed beyond the connected populations.
    """
    pools = {m: connected_graphs(m) for m in range(1, n + 1)}
    out: list[Graph] = []

    def rec(remaining, max_order, max_index, acc):
        if remaining == 0:
            g = acc[0]
            for h in acc[1:]:
                g = disjoint_union(g, h)
            out.append(g)
            return
        for m in range(min(remaining, max_order), 0, -1):
            start = max_index if m == max_order else len(pools[m]) - 1
            for i in range(start, -1, -1):
                rec(remaining - m, m, i, acc + [pools[m][i]])

    rec(n, n, len(pools[n]) - 1, [])
    return tuple(out)


def stream_graphs(lines, min_degree: int = 0):
    """Decode a graph6 stream; yields (lineno, graph_or_None, error_or_None)."""
    yield from iter_graph6(lines, min_degree=min_degree)


# -- bulk classification ------------------------------------------------------


@dataclass
class Classified:
    graph: Graph
    key: bytes
    k_connected: bool
    minimal: bool
    critical: bool
    uniform: bool
    super_minimal: bool

    def flags(self) -> dict[str, bool]:
        return {"k_connected": self.k_connected, "minimal": self.minimal,
                "critical": self.critical, "uniform": self.uniform,
                "super_minimal": self.super_minimal}


def _classify_one(g: Graph, k: int, key: bytes) -> Classified:
    if not _k_connected_bool(g, k):
        return Classified(g, key, False, False, False, False, False)
    # probe the sturdiest edge first: if its deletion keeps k-connectivity
    # the graph is not minimal and the full destroyed-edge scan is skipped
    minimal = None
    probe = max(g.edges(), key=lambda e: (min(g.degree(e.u), g.degree(e.v)),
                                          -e.u, -e.v))
    from .core import delete_edge
    if _k_connected_bool(delete_edge(g, probe), k):
        minimal = False
    if minimal is None:
        minimal = _minimal_bool(g, k)[0]
    critical = _critical_bool(g, k)[0]
    uniform = _uniform_bool(g, k)[0]
    if minimal:
        sm = contains_k_connected_induced(g, k, forbid_full=True) is None
    else:
        sm = False
    return Classified(g, key, True, minimal, critical, uniform, sm)


_CLASSIFIED_CACHE: dict[tuple, tuple[Classified, ...]] = {}


def classified_population(n: int, k: int, max_edges: int | None = None,
                          graphs=None) -> tuple[Classified, ...]:
    """Classify the connected min-degree-k population on n vertices."""
    key = (n, k, max_edges, graphs is None)
    if graphs is None:
        if key in _CLASSIFIED_CACHE:
            return _CLASSIFIED_CACHE[key]
        graphs = connected_graphs(n, min_degree=k, max_edges=max_edges)
    out = tuple(_classify_one(g, k, canon.canonical_key(g)) for g in graphs)
    if key[3]:
        _CLASSIFIED_CACHE[key] = out
    return out


# -- reports ------------------------------------------------------------------


@dataclass
class JobReport:
    job: str
    params: dict
    counts: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def records(self):
        yield {"record": "job", "job": self.job, **self.params}
        for row in self.counts:
            yield {"record": "count", "job": self.job, **row}
        for v in self.violations:
            yield {"record": "violation", "job": self.job, **v}
        for name, value in sorted(self.extras.items()):
            yield {"record": "extra", "job": self.job, "name": name,
                   "value": value}
        yield {"record": "summary", "job": self.job,
               "violations": len(self.violations),
               "elapsed_s": round(self.elapsed, 3)}


def _g6(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


_DEGREE_BOUNDS = {
    "minimal": lambda n, k: Fraction((k - 1) * n + 2 * k, 2 * k - 1),
    "uniform": lambda n, k: Fraction(2 * n + 2, 3),
    "super-minimal": lambda n, k: Fraction(n + 3, 2),
}


def verify_degree_bound(n_values, k: int, klass: str,
                        max_edges_for=None) -> JobReport:
    """Check the minimum count of degree-k vertices for a class.

    `max_edges_for` optionally maps n to an edge cap used as a population
    prefilter (honest bootstrapping: the cap must have been verified
    unpruned on smaller orders first).
    """
    if klass == "uniform" and k != 3:
        raise GraphError("uniform degree bound is only stated for k = 3")
    if klass == "super-minimal" and k != 3:
        raise GraphError("super-minimal degree bound is only stated for k = 3")
    bound_fn = _DEGREE_BOUNDS[klass]
    flag = {"minimal": "minimal", "uniform": "uniform",
            "super-minimal": "super_minimal"}[klass]
    report = JobReport("degree-bound", {"k": k, "class": klass,
                                        "n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        cap = max_edges_for(n) if max_edges_for else None
        pop = classified_population(n, k, max_edges=cap)
        in_class = [c for c in pop if getattr(c, flag)]
        bound = bound_fn(n, k)
        for c in in_class:
            vk = sum(1 for d in c.graph.degrees() if d == k)
            if Fraction(vk) < bound:
                ok, _ = _revalidate_flag(c.graph, k, flag)
                report.violations.append(
                    {"n": n, "graph6": _g6(c.graph), "v_k": vk,
                     "bound": f"{bound.numerator}/{bound.denominator}",
                     "revalidated": ok})
        report.counts.append({"n": n, "examined": len(pop),
                              "in_class": len(in_class),
                              "prefilter_max_edges": cap})
    report.elapsed = time.perf_counter() - start
    return report


def _revalidate_flag(g: Graph, k: int, flag: str):
    """Second opinion from the certificate-producing predicates."""
    label, cert = classify(g, k)
    return getattr(label, {"super_minimal": "super_minimal"}.get(flag, flag)), cert


def extremal_search(n: int, k: int = 3, graphs=None) -> JobReport:
    """Super-minimal graphs attaining the degree-k floor, plus belt hits."""
    report = JobReport("extremal-search", {"k": k, "n": n})
    start = time.perf_counter()
    if graphs is None:
        pop = classified_population(n, k)
    else:
        pop = tuple(_classify_one(g, k, canon.canonical_key(g)) for g in graphs)
    target = -(-(n + 3) // 2)  # ceil((n+3)/2)
    hits = []
    belts = []
    for c in pop:
        if not c.super_minimal:
            continue
        v3 = sum(1 for d in c.graph.degrees() if d == k)
        if v3 == target:
            hits.append(_g6(c.graph))
        if (n - 13) % 12 == 0 and n >= 13 and v3 == 8 + 6 * ((n - 13) // 12):
            belts.append(_g6(c.graph))
    report.extras["extremal"] = sorted(hits)
    report.extras["belt_fingerprint"] = sorted(belts)
    report.counts.append({"n": n, "extremal": len(hits)})
    report.elapsed = time.perf_counter() - start
    return report


def verify_edge_bound(n_values, k: int, klass: str,
                      max_edges_for=None) -> JobReport:
    """Edge-count ceilings and their equality characterizations."""
    spec = {
        ("super-minimal", 3): ("super_minimal", lambda n: 2 * n - 2, "wheel"),
        ("uniform", 3): ("uniform", lambda n: 2 * n - 2, "wheel"),
        ("minimal", 3): ("minimal", lambda n: 3 * n - 9 if n >= 7 else None,
                         "k3_bipartite"),
        ("minimal", 2): ("minimal", lambda n: 2 * n - 4 if n >= 4 else None,
                         "k2_bipartite"),
    }
    if (klass, k) not in spec:
        raise GraphError(f"no edge bound recorded for {klass}, k={k}")
    flag, bound_fn, equality = spec[(klass, k)]
    report = JobReport("edge-bound", {"k": k, "class": klass,
                                      "n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        cap = max_edges_for(n) if max_edges_for else None
        pop = classified_population(n, k, max_edges=cap)
        in_class = [c for c in pop if getattr(c, flag)]
        bound = bound_fn(n)
        equal_keys = []
        for c in in_class:
            m = c.graph.num_edges
            if bound is not None and m > bound:
                report.violations.append(
                    {"n": n, "graph6": _g6(c.graph), "edges": m,
                     "bound": bound,
                     "revalidated": _revalidate_flag(c.graph, k, flag)[0]})
            if bound is not None and m == bound:
                equal_keys.append(c.key)
        # equality characterizations
        if bound is not None:
            if equality == "wheel" and n >= 4:
                expect = {canon.canonical_key(wheel(n - 1))}
                if set(equal_keys) != expect:
                    report.violations.append(
                        {"n": n, "kind": "equality-set",
                         "expected": "wheel", "got": len(equal_keys)})
            elif equality == "k3_bipartite" and n >= 8:
                expect = {canon.canonical_key(complete_bipartite(3, n - 3))}
                if set(equal_keys) != expect:
                    report.violations.append(
                        {"n": n, "kind": "equality-set",
                         "expected": "K_{3,n-3}", "got": len(equal_keys)})
            elif equality == "k2_bipartite" and n >= 5:
                expect = {canon.canonical_key(complete_bipartite(2, n - 2))}
                if set(equal_keys) != expect:
                    report.violations.append(
                        {"n": n, "kind": "equality-set",
                         "expected": "K_{2,n-2}", "got": len(equal_keys)})
        report.counts.append({"n": n, "examined": len(pop),
                              "in_class": len(in_class),
                              "at_bound": len(equal_keys),
                              "prefilter_max_edges": cap})
    report.elapsed = time.perf_counter() - start
    return report


def verify_inclusions(n_values, k: int, max_edges_for=None) -> JobReport:
    """Class tallies, the inclusion hierarchy, and strictness witnesses."""
    report = JobReport("inclusions", {"k": k, "n": list(n_values)})
    start = time.perf_counter()
    sm_not_uniform = []
    minimal_not_sm = []
    sm_population: dict[int, list[str]] = {}
    for n in n_values:
        cap = max_edges_for(n) if max_edges_for else None
        pop = classified_population(n, k, max_edges=cap)
        tally = {"k_connected": 0, "minimal": 0, "critical": 0,
                 "uniform": 0, "super_minimal": 0}
        for c in pop:
            for name in tally:
                tally[name] += getattr(c, name)
            if k >= 2 and c.uniform and not c.super_minimal:
                report.violations.append(
                    {"n": n, "graph6": _g6(c.graph),
                     "kind": "uniform-not-super-minimal",
                     "revalidated": classify(c.graph, k)[0].uniform})
            if c.super_minimal and not c.minimal:
                report.violations.append(
                    {"n": n, "graph6": _g6(c.graph),
                     "kind": "super-minimal-not-minimal"})
            if c.super_minimal and not c.critical:
                report.violations.append(
                    {"n": n, "graph6": _g6(c.graph),
                     "kind": "super-minimal-not-critical",
                     "revalidated": classify(c.graph, k)[0].critical})
            if c.super_minimal and not c.uniform:
                sm_not_uniform.append(_g6(c.graph))
            if c.minimal and not c.super_minimal:
                minimal_not_sm.append(_g6(c.graph))
            if c.super_minimal:
                sm_population.setdefault(n, []).append(_g6(c.graph))
        report.counts.append({"n": n, "examined": len(pop), **tally,
                              "prefilter_max_edges": cap})
    report.extras["sm_not_uniform"] = sm_not_uniform
    report.extras["minimal_not_sm"] = minimal_not_sm
    report.extras["sm_population"] = {str(n): sorted(v)
                                      for n, v in sm_population.items()}
    report.elapsed = time.perf_counter() - start
    return report


def _minimal_population(n: int, k: int = 3):
    return [c for c in classified_population(n, k) if c.minimal]


def check_mader_forest(n_values, k: int = 3) -> JobReport:
    """High-degree vertices of a minimally k-connected graph induce a forest."""
    report = JobReport("mader-forest", {"k": k, "n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        pop = _minimal_population(n, k)
        for c in pop:
            g = c.graph
            high = [v for v in range(g.n) if g.degree(v) > k]
            hmask = _bits.mask_of(high)
            sub = tuple(g.masks[v] & hmask if (hmask >> v) & 1 else 0
                        for v in range(g.n))
            edges = sum(m.bit_count() for m in sub) // 2
            comps = len(_bits.components(sub, hmask)) if high else 0
            if edges > len(high) - comps:
                report.violations.append({"n": n, "graph6": _g6(g),
                                          "kind": "induced-cycle"})
        report.counts.append({"n": n, "minimal": len(pop)})
    report.elapsed = time.perf_counter() - start
    return report


def check_cycle_degree3(n_values) -> JobReport:
    """Every cycle of a minimally 3-connected graph has two degree-3 vertices."""
    report = JobReport("cycle-two-degree-3", {"n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        pop = _minimal_population(n, 3)
        cycles = 0
        for c in pop:
            g = c.graph
            degs = g.degrees()
            for cyc in _bits.all_cycles(g.masks, g.n):
                cycles += 1
                if sum(1 for v in cyc if degs[v] == 3) < 2:
                    report.violations.append(
                        {"n": n, "graph6": _g6(g), "cycle": list(cyc)})
        report.counts.append({"n": n, "minimal": len(pop), "cycles": cycles})
    report.elapsed = time.perf_counter() - start
    return report


def check_order4_contraction(n_values) -> JobReport:
    """Contracting an edge of order at least 4 keeps minimal 3-connectivity."""
    from .core import contract_edge
    report = JobReport("order-4-contraction", {"n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        pop = _minimal_population(n, 3)
        checked = 0
        for c in pop:
            g = c.graph
            for e in g.edges():
                if min(g.degree(e.u), g.degree(e.v)) < 4:
                    continue
                checked += 1
                contracted, _ = contract_edge(g, e)
                simple = contracted.num_edges == g.num_edges - 1
                if not simple or not _minimal_bool(contracted, 3)[0]:
                    report.violations.append(
                        {"n": n, "graph6": _g6(g), "edge": [e.u, e.v],
                         "simple": simple})
        report.counts.append({"n": n, "minimal": len(pop),
                              "order4_edges": checked})
    report.elapsed = time.perf_counter() - start
    return report


def check_contract_minimal_critical(n_values) -> JobReport:
    """Contracting the high-degree forest keeps minimal + critical (k=3)."""
    from .transforms import contract_degree_forest
    report = JobReport("contract-minimal-critical", {"n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        pop = [c for c in classified_population(n, 3)
               if c.minimal and c.critical]
        for c in pop:
            try:
                contract_degree_forest(c.graph, 3,
                                       validate_minimal_critical=True)
            except Exception as exc:
                report.violations.append({"n": n, "graph6": _g6(c.graph),
                                          "error": str(exc)})
        report.counts.append({"n": n, "minimal_critical": len(pop)})
    report.elapsed = time.perf_counter() - start
    return report


# -- bipartite witness lemmas --------------------------------------------------


def _bipartite_graph(x: int, nbhds) -> Graph:
    """X side gets ids 0..x-1, the Y side follows in the given order."""
    masks = [0] * (x + len(nbhds))
    for j, nb in enumerate(nbhds):
        yid = x + j
        for v in nb:
            masks[v] |= 1 << yid
            masks[yid] |= 1 << v
    return Graph(x + len(nbhds), tuple(masks))


def _k32_pair(nbhds):
    seen: dict[tuple, int] = {}
    for j, nb in enumerate(nbhds):
        if nb in seen:
            return seen[nb], j
        seen[nb] = j
    return None


def _semicubic_witness(x: int, nbhds):
    """Witness for the semi-cubic dichotomy: a K32 pair or a subgraph pair.

    Returns ("k32", (j1, j2)) or ("subgraph", (vertex_tuple, h)) or None.
    """
    dup = _k32_pair(nbhds)
    if dup is not None:
        return ("k32", dup)
    g = _bipartite_graph(x, nbhds)
    y = len(nbhds)

    def try_subgraph(xs_mask, ys):
        sub = xs_mask
        for j in ys:
            sub |= 1 << (x + j)
        if sub.bit_count() <= 3:
            return None
        if not _bits.is_k_connected_mask(g.masks, g.n, 3, sub):
            return None
        for j in ys:
            rest = sub & ~(1 << (x + j))
            hgraph, verts = _induced_from_mask(g, rest)
            from .connectivity import is_internally_3_connected
            if is_internally_3_connected(hgraph):
                return ("subgraph", (tuple(_bits.bits(sub)), x + j))
        return None

    # largest candidates first; fall back to the full exhaustive scan
    for size in range(x, 2, -1):
        for xs in combinations(range(x), size):
            xs_mask = _bits.mask_of(xs)
            inside = [j for j, nb in enumerate(nbhds)
                      if all(v in xs for v in nb)]
            found = try_subgraph(xs_mask, inside)
            if found:
                return found
    for size in range(x, 2, -1):
        for xs in combinations(range(x), size):
            xs_mask = _bits.mask_of(xs)
            inside = [j for j, nb in enumerate(nbhds)
                      if all(v in xs for v in nb)]
            for ysize in range(len(inside) - 1, 2, -1):
                for ys in combinations(inside, ysize):
                    found = try_subgraph(xs_mask, ys)
                    if found:
                        return found
    return None


def _induced_from_mask(g: Graph, nodes: int):
    vs = list(_bits.bits(nodes))
    pos = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    for v in vs:
        for w in _bits.bits(g.masks[v] & nodes):
            masks[pos[v]] |= 1 << pos[w]
    return Graph(len(vs), tuple(masks)), vs


def check_semicubic_dichotomy(max_x: int = 5) -> JobReport:
    """Semi-cubic bipartite graphs with |Y| >= 2|X|-4 contain the witness.

    Instances with two equal Y-neighborhoods contain the K32 witness
    outright, so the exhaustive scan only has to distinguish instances
    with pairwise distinct triples; |Y| beyond the number of triples
    forces a duplicate and needs no enumeration.
    """
    report = JobReport("semicubic-dichotomy", {"max_x": max_x})
    start = time.perf_counter()
    for x in range(3, max_x + 1):
        triples = list(combinations(range(x), 3))
        lo = max(1, 2 * x - 4)
        hi = max(len(triples), lo)  # beyond, a duplicate pair is forced
        instances = duplicates = 0
        for y_count in range(lo, hi + 1):
            for chosen in combinations_with_replacement(triples, y_count):
                instances += 1
                wit = _semicubic_witness(x, chosen)
                if wit is None:
                    report.violations.append(
                        {"x": x, "neighborhoods": [list(t) for t in chosen]})
                elif wit[0] == "k32":
                    duplicates += wit[1][0] != wit[1][1]
        report.counts.append({"x": x, "instances": instances,
                              "y_range": [lo, hi],
                              "note": "larger Y forces duplicate triples"})
    report.elapsed = time.perf_counter() - start
    return report


def _closed_nbhd_subgraph_3_connected(g: Graph, x: int, zset) -> bool:
    nodes = 0
    for j in zset:
        nodes |= 1 << (x + j)
        nodes |= g.masks[x + j]
    if nodes.bit_count() <= 3:
        return False
    return _bits.is_k_connected_mask(g.masks, g.n, 3, nodes)


def _induced_3conn_zset(x: int, nbhds, proper: bool):
    g = _bipartite_graph(x, nbhds)
    y = len(nbhds)
    top = y - 1 if proper else y
    for size in range(top, 0, -1):
        for zs in combinations(range(y), size):
            if _closed_nbhd_subgraph_3_connected(g, x, zs):
                return zs
    return None


def _canonical_instances(x: int, types, y_count: int):
    """One instance per X-relabeling class (witness existence is invariant).

    Instances are nondecreasing type-index tuples; a representative is one
    that stays lexicographically minimal under every permutation of X.
    """
    from itertools import permutations
    type_index = {t: i for i, t in enumerate(types)}
    tables = []
    for perm in permutations(range(x)):
        if perm == tuple(range(x)):
            continue
        tables.append(tuple(type_index[tuple(sorted(perm[v] for v in t))]
                            for t in types))
    total = 0
    for chosen in combinations_with_replacement(range(len(types)), y_count):
        total += 1
        minimal = True
        for tbl in tables:
            mapped = sorted(tbl[i] for i in chosen)
            if tuple(mapped) < chosen:
                minimal = False
                break
        if minimal:
            yield total, tuple(types[i] for i in chosen)
    # the generator's consumer reads the final raw count via send-free
    # convention: last yielded `total` is not exact, so recompute there


def _raw_instance_count(num_types: int, y_count: int) -> int:
    from math import comb
    return comb(num_types + y_count - 1, y_count)


def check_closed_neighborhood_lemma(max_x: int = 5, slack: int = 3) -> JobReport:
    """Y-subsets with 3-connected closed-neighborhood subgraphs exist.

    `slack` = 3 checks the |Y| >= 2|X|-3 statement at the tight size, and
    `slack` = 2 checks the proper-subset corollary at |Y| = 2|X|-2.
    Larger Y only gains unused vertices: restricting to any tight-size
    subfamily keeps the hypotheses and the found witness, so the tight
    size is the exhaustive frontier.
    """
    proper = slack == 2
    name = "proper-zset" if proper else "zset"
    report = JobReport(name, {"max_x": max_x})
    start = time.perf_counter()
    for x in range(3, max_x + 1):
        types = [t for s in range(3, x + 1)
                 for t in combinations(range(x), s)]
        y_count = 2 * x - slack
        checked = 0
        for _, chosen in _canonical_instances(x, types, y_count):
            checked += 1
            zs = _induced_3conn_zset(x, chosen, proper)
            if zs is None:
                report.violations.append(
                    {"x": x, "neighborhoods": [list(t) for t in chosen]})
        report.counts.append({"x": x,
                              "instances": _raw_instance_count(len(types),
                                                               y_count),
                              "representatives": checked,
                              "y_count": y_count})
    report.elapsed = time.perf_counter() - start
    return report


def check_structure_lemmas(max_n: int = 8, max_x: int = 5) -> dict[str, JobReport]:
    """Run every structure-lemma suite; keys name the individual checks."""
    ns = list(range(4, max_n + 1))
    return {
        "mader-forest": check_mader_forest(ns, 3),
        "cycle-two-degree-3": check_cycle_degree3(ns),
        "order-4-contraction": check_order4_contraction(ns),
        "contract-minimal-critical": check_contract_minimal_critical(ns),
        "semicubic-dichotomy": check_semicubic_dichotomy(max_x),
        "zset": check_closed_neighborhood_lemma(max_x, slack=3),
        "proper-zset": check_closed_neighborhood_lemma(max_x, slack=2),
    }


def conjecture_scan(n_values, k: int = 3) -> JobReport:
    """Empirical minimum degree-k vertex ratios per class (exploratory)."""
    report = JobReport("conjecture-scan", {"k": k, "n": list(n_values)})
    start = time.perf_counter()
    for n in n_values:
        pop = classified_population(n, k)
        row = {"n": n}
        for flag in ("minimal", "uniform", "super_minimal"):
            ratios = [Fraction(sum(1 for d in c.graph.degrees() if d == k), n)
                      for c in pop if getattr(c, flag)]
            if ratios:
                m = min(ratios)
                row[f"min_ratio_{flag}"] = f"{m.numerator}/{m.denominator}"
            else:
                row[f"min_ratio_{flag}"] = None
        report.counts.append(row)
    report.elapsed = time.perf_counter() - start
    return report
