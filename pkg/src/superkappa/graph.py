"""Immutable simple undirected graphs over vertices 0..n-1.

Vertices are dense integer indices; optional string labels carry
construction provenance (e.g. "(x,3)") but never identity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CapacityError, InputError

ISO_CAP = 64


@dataclass(frozen=True)
class Bipartition:
    """A two-coloring (X, Y) of a bipartite graph's vertex set."""

    X: frozenset
    Y: frozenset


class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "edges", "labels", "_adj", "_masks")

    def __init__(self, n, edges, labels=None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        norm = set()
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            norm.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        if labels is not None and len(labels) != n:
            raise InputError("labels length must equal vertex count")
        self.n = n
        self.edges = frozenset(norm)
        self.labels = tuple(labels) if labels is not None else None
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = None

    # -- basic accessors -------------------------------------------------

    def _check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} not in range 0..{self.n - 1}")

    def neighborhood(self, v):
        """N(v): the set of vertices adjacent to v."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v):
        self._check_vertex(v)
        return len(self._adj[v])

    def min_degree(self):
        if self.n == 0:
            raise InputError("min_degree of empty graph")
        return min(len(s) for s in self._adj)

    def label(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    def adjacency_masks(self):
        """Per-vertex neighbor bitmasks, cached (used by hot scans)."""
        if self._masks is None:
            masks = []
            for v in range(self.n):
                m = 0
                for w in self._adj[v]:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def is_complete(self):
        return self.n >= 1 and len(self.edges) == self.n * (self.n - 1) // 2

    # -- structure -------------------------------------------------------

    def components(self):
        """Maximal connected vertex sets, ordered by lowest member."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self):
        return self.n >= 1 and len(self.components()) == 1

    def is_bipartite(self):
        """Return a Bipartition, or None if some component has an odd cycle.

        Within each component the lowest-index vertex goes to X.
        """
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        X = frozenset(v for v in range(self.n) if color[v] == 0)
        Y = frozenset(v for v in range(self.n) if color[v] == 1)
        return Bipartition(X=X, Y=Y)

    def induced_subgraph(self, W):
        """Subgraph on W, relabeled 0..k-1; original identities kept as labels."""
        W = sorted(set(W))
        for v in W:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(W)}
        keep = set(W)
        edges = [(index[u], index[v]) for u, v in self.edges if u in keep and v in keep]
        labels = [self.label(v) for v in W]
        return Graph(len(W), edges, labels=labels)

    def remove_vertices(self, S):
        for v in S:
            self._check_vertex(v)
        return self.induced_subgraph(set(range(self.n)) - set(S))

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


# -- isomorphism for small graphs ----------------------------------------


def _refine_colors(G, H):
    """Joint 1-dimensional color refinement; returns per-graph color lists."""
    cg = [G.degree(v) for v in range(G.n)]
    ch = [H.degree(v) for v in range(H.n)]
    while True:
        table = {}
        new_g, new_h = [], []
        for graph, colors, out in ((G, cg, new_g), (H, ch, new_h)):
            for v in range(graph.n):
                sig = (colors[v], tuple(sorted(colors[w] for w in graph.neighborhood(v))))
                out.append(table.setdefault(sig, len(table)))
        if new_g == cg and new_h == ch:
            return cg, ch
        cg, ch = new_g, new_h


def is_isomorphic_small(G, H, cap=ISO_CAP):
    """Edge-preserving bijection test by backtracking; graphs up to `cap` vertices."""
    if G.n > cap or H.n > cap:
        raise CapacityError(f"isomorphism search capped at {cap} vertices")
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    if G.n == 0:
        return True
    cg, ch = _refine_colors(G, H)
    if sorted(cg) != sorted(ch):
        return False

    n = G.n
    masks_h = H.adjacency_masks()
    by_color_h = {}
    for v in range(n):
        by_color_h.setdefault(ch[v], []).append(v)

    # map G vertices in an order that keeps the partial map connected
    order = []
    placed = [False] * n
    for _ in range(n):
        best = None
        for v in range(n):
            if placed[v]:
                continue
            attached = sum(1 for w in G.neighborhood(v) if placed[w])
            key = (-attached, len(by_color_h[cg[v]]), v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        placed[best[1]] = True

    phi = [-1] * n
    used = [False] * n
    mapped_mask = 0

    def extend(k):
        nonlocal mapped_mask
        if k == n:
            return True
        g = order[k]
        required = 0
        for w in G.neighborhood(g):
            if phi[w] != -1:
                required |= 1 << phi[w]
        for h in by_color_h[cg[g]]:
            if used[h]:
                continue
            if masks_h[h] & mapped_mask != required:
                continue
            phi[g] = h
            used[h] = True
            mapped_mask |= 1 << h
            if extend(k + 1):
                return True
            phi[g] = -1
            used[h] = False
            mapped_mask &= ~(1 << h)
        return False

    return extend(0)
