"""Exact vertex/edge connectivity, minimum vertex cuts, and the
max-connectivity / super-connectivity predicates.

The fast path is unit-capacity augmenting-path flow on the vertex-split
digraph; a brute-force subset scan backs it as an independent oracle and
as the exhaustive cut-enumeration method.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InputError, NoCutError

EXHAUSTIVE_BUDGET = 10**6  # candidate subsets
SEPARATOR_BUDGET = 10**5  # distinct cuts
# above this many candidate subsets, prefer separator enumeration even
# when the exhaustive budget would allow the scan
_EXHAUSTIVE_FAST_CAP = 200_000


@dataclass(frozen=True)
class VertexCut:
    vertices: frozenset
    size: int
    isolates_vertex: bool
    is_neighborhood_of_min_degree_vertex: bool

    def to_json(self):
        return {
            "vertices": sorted(self.vertices),
            "size": self.size,
            "isolates_vertex": self.isolates_vertex,
            "is_neighborhood_of_min_degree_vertex": self.is_neighborhood_of_min_degree_vertex,
        }


@dataclass
class SuperKappaResult:
    """Tri-state outcome: status True/False, or None when the cut
    enumeration hit its budget before completing."""

    status: bool | None
    witness: VertexCut | None = None
    vacuous: bool = False  # complete graph: no cuts to quantify over
    enumeration_complete: bool = True
    cuts_examined: int = 0
    method: str = "flow"


@dataclass
class ConnectivityReport:
    kappa: int
    kappa_edge: int | None
    delta: int
    is_max_kappa: bool
    is_super_kappa: bool | None
    witness_cut: VertexCut | None
    method: str  # "flow" | "exhaustive" | "separator-enumeration"
    enumeration_complete: bool
    vacuous_super_kappa: bool = False

    def to_json(self):
        return {
            "kappa": self.kappa,
            "kappa_edge": self.kappa_edge,
            "delta": self.delta,
            "is_max_kappa": self.is_max_kappa,
            "is_super_kappa": self.is_super_kappa,
            "witness_cut": self.witness_cut.to_json() if self.witness_cut else None,
            "method": self.method,
            "enumeration_complete": self.enumeration_complete,
            "vacuous_super_kappa": self.vacuous_super_kappa,
        }


# -- unit-capacity flow on the vertex-split digraph -------------------------


class _SplitFlow:
    """Max number of internally vertex-disjoint s-t paths.

    Vertex v splits into nodes 2v (in) and 2v+1 (out) joined by a
    capacity-1 arc; every edge uv becomes arcs out(u)->in(v) and
    out(v)->in(u) of effectively unbounded capacity.
    """

    def __init__(self, G, removed=frozenset(), uncuttable=frozenset()):
        self.G = G
        self.removed = frozenset(removed)
        n = G.n
        big = n + 1
        cap = {}
        adj = [[] for _ in range(2 * n)]

        def add(a, b, c):
            if (a, b) not in cap:
                adj[a].append(b)
                adj[b].append(a)
                cap[(a, b)] = 0
                cap[(b, a)] = 0
            cap[(a, b)] += c

        for v in range(n):
            if v in self.removed:
                continue
            add(2 * v, 2 * v + 1, big if v in uncuttable else 1)
        for u, v in G.edges:
            if u in self.removed or v in self.removed:
                continue
            add(2 * u + 1, 2 * v, big)
            add(2 * v + 1, 2 * u, big)
        self.cap = cap
        self.adj = adj
        self.n2 = 2 * n

    def max_flow(self, s, t, limit):
        """Flow from out(s) to in(t), stopping early once `limit` is reached."""
        src, sink = 2 * s + 1, 2 * t
        cap = self.cap
        adj = self.adj
        flow = 0
        while flow < limit:
            parent = {src: None}
            queue = deque([src])
            while queue and sink not in parent:
                a = queue.popleft()
                for b in adj[a]:
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        queue.append(b)
            if sink not in parent:
                break
            b = sink
            while parent[b] is not None:
                a = parent[b]
                cap[(a, b)] -= 1
                cap[(b, a)] += 1
                b = a
            flow += 1
        self._last = (src, sink)
        return flow

    def min_cut_vertices(self):
        """Split vertices saturated by the last max-flow computation."""
        src, _ = self._last
        cap = self.cap
        adj = self.adj
        reach = {src}
        queue = deque([src])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in reach and cap[(a, b)] > 0:
                    reach.add(b)
                    queue.append(b)
        cut = set()
        for v in range(self.G.n):
            if v in self.removed:
                continue
            if 2 * v in reach and 2 * v + 1 not in reach:
                cut.add(v)
        return frozenset(cut)


def _st_vertex_connectivity(G, s, t, limit, removed=frozenset(), uncuttable=frozenset()):
    flow = _SplitFlow(G, removed=removed, uncuttable=uncuttable)
    value = flow.max_flow(s, t, limit)
    return value, flow


def _pair_scan_order(G):
    """Deterministic (s,t) scan: s = lowest-index minimum-degree vertex,
    t ascending over non-neighbors, then non-adjacent neighbor pairs."""
    delta = G.min_degree()
    s = min(v for v in range(G.n) if G.degree(v) == delta)
    ns = G.neighborhood(s)
    pairs = [(s, t) for t in range(G.n) if t != s and t not in ns]
    nbrs = sorted(ns)
    for i, u in enumerate(nbrs):
        for w in nbrs[i + 1 :]:
            if w not in G.neighborhood(u):
                pairs.append((u, w))
    return pairs


def vertex_connectivity(G):
    """kappa(G): |V|-1 for complete graphs, 0 when disconnected, else the
    minimum over non-adjacent pairs of the max vertex-disjoint path count."""
    if G.n == 0:
        raise InputError("connectivity of the empty graph")
    if G.is_complete():
        return G.n - 1
    if not G.is_connected():
        return 0
    best = G.n - 1
    for s, t in _pair_scan_order(G):
        value, _ = _st_vertex_connectivity(G, s, t, best)
        if value < best:
            best = value
    return best


def vertex_connectivity_exhaustive(G):
    """Brute-force oracle: smallest vertex subset whose removal disconnects
    the graph, by scanning subsets in increasing size. Small graphs only."""
    if G.n == 0:
        raise InputError("connectivity of the empty graph")
    if G.is_complete():
        return G.n - 1
    if not G.is_connected():
        return 0
    masks = G.adjacency_masks()
    full = (1 << G.n) - 1
    for k in range(G.n - 1):
        for S in combinations(range(G.n), k):
            if _disconnects(masks, full, S):
                return k
    return G.n - 1


def _disconnects(masks, full, S):
    smask = 0
    for v in S:
        smask |= 1 << v
    rem = full & ~smask
    if rem == 0:
        return False
    comp = rem & -rem
    frontier = comp
    while frontier:
        nbrs = 0
        m = frontier
        while m:
            b = m & -m
            nbrs |= masks[b.bit_length() - 1]
            m ^= b
        frontier = nbrs & rem & ~comp
        comp |= frontier
    return comp != rem


def edge_connectivity(G):
    """kappa'(G): minimum edge cut size via unit-capacity flow, fixed source."""
    if G.n < 2:
        raise InputError("edge connectivity needs at least 2 vertices")
    if not G.is_connected():
        return 0
    cap = {}
    adj = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
        cap[(u, v)] = 1
        cap[(v, u)] = 1

    def maxflow(s, t, limit):
        work = dict(cap)
        flow = 0
        while flow < limit:
            parent = {s: None}
            queue = deque([s])
            while queue and t not in parent:
                a = queue.popleft()
                for b in adj[a]:
                    if b not in parent and work[(a, b)] > 0:
                        parent[b] = a
                        queue.append(b)
            if t not in parent:
                break
            b = t
            while parent[b] is not None:
                a = parent[b]
                work[(a, b)] -= 1
                work[(b, a)] += 1
                b = a
            flow += 1
        return flow

    best = G.min_degree()
    for t in range(1, G.n):
        best = min(best, maxflow(0, t, best))
    return best


# -- cuts and predicates -----------------------------------------------------


def classify_cut(G, S):
    """Build a VertexCut for S, recomputing both classification flags."""
    S = frozenset(S)
    rest = G.remove_vertices(S)
    comps = rest.components()
    if len(comps) < 2:
        raise InputError(f"{sorted(S)} is not a vertex cut")
    isolates = any(len(c) == 1 for c in comps)
    delta = G.min_degree()
    is_nbhd = any(
        G.degree(v) == delta and G.neighborhood(v) == S for v in range(G.n) if v not in S
    )
    return VertexCut(
        vertices=S,
        size=len(S),
        isolates_vertex=isolates,
        is_neighborhood_of_min_degree_vertex=is_nbhd,
    )


def minimum_vertex_cut(G):
    """One minimum cut, from the first optimal (s,t) pair in scan order."""
    if not G.is_connected():
        raise InputError("minimum cut of a disconnected graph")
    if G.is_complete():
        raise NoCutError("complete graphs have no vertex cut")
    best = G.n - 1
    best_pair = None
    for s, t in _pair_scan_order(G):
        value, _ = _st_vertex_connectivity(G, s, t, best)
        if value < best:
            best = value
            best_pair = (s, t)
    s, t = best_pair
    _, flow = _st_vertex_connectivity(G, s, t, G.n)
    return classify_cut(G, flow.min_cut_vertices())


@dataclass
class CutEnumeration:
    cuts: list
    complete: bool
    method: str


def _enumerate_exhaustive(G, kappa, budget):
    masks = G.adjacency_masks()
    full = (1 << G.n) - 1
    cuts = []
    for S in combinations(range(G.n), kappa):
        if _disconnects(masks, full, S):
            cuts.append(frozenset(S))
    return cuts


def _enumerate_separators(G, kappa, budget):
    """All minimum vertex cuts via per-pair enumeration of minimum s-t
    separators, using solution-space partitioning on forced-out vertices."""
    found = set()
    complete = True
    for s, t in _pair_scan_order(G):
        value, flow = _st_vertex_connectivity(G, s, t, kappa + 1)
        if value != kappa:
            continue
        stack = [(frozenset(), frozenset())]  # (forced_in, forced_out)
        while stack:
            forced_in, forced_out = stack.pop()
            target = kappa - len(forced_in)
            value, flow = _st_vertex_connectivity(
                G, s, t, target + 1, removed=forced_in, uncuttable=forced_out
            )
            if value > target:
                continue
            cut = forced_in | flow.min_cut_vertices()
            found.add(cut)
            if len(found) > budget:
                return sorted(found, key=sorted), False
            free = sorted(cut - forced_in)
            for i, v in enumerate(free):
                stack.append(
                    (forced_in | frozenset(free[:i]), forced_out | {v})
                )
    return sorted(found, key=sorted), complete


def all_minimum_vertex_cuts(G, budget=EXHAUSTIVE_BUDGET, method="auto"):
    """Every vertex cut of size kappa(G), with an explicit completeness flag.

    method "exhaustive" scans all C(n, kappa) subsets (complete while that
    count fits the budget); "separators" enumerates minimum s-t separators
    over all non-adjacent pairs; "auto" picks whichever is cheaper.
    """
    if not G.is_connected():
        raise InputError("cut enumeration on a disconnected graph")
    if G.is_complete():
        raise NoCutError("complete graphs have no vertex cut")
    kappa = vertex_connectivity(G)
    candidates = comb(G.n, kappa)
    if method == "auto":
        method = (
            "exhaustive"
            if candidates <= min(budget, _EXHAUSTIVE_FAST_CAP)
            else "separators"
        )
    if method == "exhaustive":
        if candidates > budget:
            return CutEnumeration(cuts=[], complete=False, method="exhaustive")
        raw = _enumerate_exhaustive(G, kappa, budget)
        complete = True
    elif method == "separators":
        raw, complete = _enumerate_separators(G, kappa, min(budget, SEPARATOR_BUDGET))
    else:
        raise InputError(f"unknown enumeration method {method!r}")
    cuts = [classify_cut(G, S) for S in sorted(raw, key=sorted)]
    name = "exhaustive" if method == "exhaustive" else "separator-enumeration"
    return CutEnumeration(cuts=cuts, complete=complete, method=name)


def is_super_kappa(G, budget=EXHAUSTIVE_BUDGET, method="auto"):
    """Every minimum vertex cut is the neighborhood of a minimum-degree
    vertex. Complete graphs hold vacuously; incomplete enumeration yields
    status None."""
    if not G.is_connected():
        raise InputError("super connectivity of a disconnected graph")
    if G.is_complete():
        return SuperKappaResult(status=True, vacuous=True)
    enum = all_minimum_vertex_cuts(G, budget=budget, method=method)
    for cut in enum.cuts:
        if not cut.is_neighborhood_of_min_degree_vertex:
            return SuperKappaResult(
                status=False,
                witness=cut,
                enumeration_complete=enum.complete,
                cuts_examined=len(enum.cuts),
                method=enum.method,
            )
    if not enum.complete:
        return SuperKappaResult(
            status=None,
            enumeration_complete=False,
            cuts_examined=len(enum.cuts),
            method=enum.method,
        )
    return SuperKappaResult(status=True, cuts_examined=len(enum.cuts), method=enum.method)


def is_max_kappa(G):
    if not G.is_connected():
        raise InputError("max connectivity of a disconnected graph")
    return vertex_connectivity(G) == G.min_degree()


def connectivity_report(G, budget=EXHAUSTIVE_BUDGET, method="auto"):
    kappa = vertex_connectivity(G)
    delta = G.min_degree()
    kappa_edge = edge_connectivity(G) if G.n >= 2 else None
    if G.is_connected():
        sk = is_super_kappa(G, budget=budget, method=method)
        return ConnectivityReport(
            kappa=kappa,
            kappa_edge=kappa_edge,
            delta=delta,
            is_max_kappa=kappa == delta,
            is_super_kappa=sk.status,
            witness_cut=sk.witness,
            method=sk.method,
            enumeration_complete=sk.enumeration_complete,
            vacuous_super_kappa=sk.vacuous,
        )
    return ConnectivityReport(
        kappa=0,
        kappa_edge=kappa_edge,
        delta=delta,
        is_max_kappa=False,
        is_super_kappa=None,
        witness_cut=None,
        method="flow",
        enumeration_complete=True,
    )
