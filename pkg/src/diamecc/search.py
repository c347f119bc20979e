"""Shortest-path searches, exact distance oracles, and the degree-3 blow-up.

Algorithm selection inside sssp is internal: plain BFS when every weight
is 1, a deque-based 0/1 search when weights are 0 or 1 (the blow-up
gadget needs 0-weight edges without a heap), and binary-heap Dijkstra
otherwise.  All tie-breaking is by (distance, vertex id) ascending, so
every operation here is deterministic.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import UNREACHABLE, DistanceArray, Graph, Neighborhood


def _bfs(adj, n, sources):
    dist = [UNREACHABLE] * n
    queue = deque()
    for s in sources:
        if dist[s] == UNREACHABLE:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v, _ in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


def _zero_one_bfs(adj, n, sources):
    dist = [UNREACHABLE] * n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v, w in adj[u]:
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                if w == 0:
                    queue.appendleft(v)
                else:
                    queue.append(v)
    return dist


def _dijkstra(adj, n, sources):
    dist = [UNREACHABLE] * n
    heap = []
    for s in sources:
        if dist[s] == UNREACHABLE:
            dist[s] = 0
            heap.append((0, s))
    heapq.heapify(heap)
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist[u]:
            continue
        for v, w in adj[u]:
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _distances(g: Graph, sources, direction: str):
    adj = g.adjacency(direction)
    if g.unit_weights:
        return _bfs(adj, g.n, sources)
    if g.zero_one_weights:
        return _zero_one_bfs(adj, g.n, sources)
    return _dijkstra(adj, g.n, sources)


def sssp(g: Graph, source: int, direction: str = "out") -> DistanceArray:
    """Exact single-source shortest paths.

    ``direction="out"`` gives d(source, v); ``"in"`` gives d(v, source).
    Unreachable vertices get the UNREACHABLE sentinel.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    return DistanceArray(_distances(g, (source,), direction), source, direction)


def multi_source_distance(g: Graph, sources, direction: str = "out") -> DistanceArray:
    """dist[v] = min over s in sources of d(s, v) (out) or d(v, s) (in)."""
    srcs = sorted(set(sources))
    if not srcs:
        raise ValueError("source set must be nonempty")
    if srcs[0] < 0 or srcs[-1] >= g.n:
        raise ValueError("source id out of range")
    return DistanceArray(_distances(g, srcs, direction), tuple(srcs), direction)


def k_closest(g: Graph, v: int, s: int, direction: str = "out") -> Neighborhood:
    """The s closest vertices to v under (distance, id) order.

    The search is truncated: it settles vertices in nondecreasing distance
    and stops once the s-th closest vertex's distance level is exhausted,
    which keeps the (distance, id) order exact even with 0-weight edges.
    """
    if not 1 <= s <= g.n:
        raise ValueError(f"s must be in [1, {g.n}], got {s}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    adj = g.adjacency(direction)
    tentative = {v: 0}
    heap = [(0, v)]
    settled = {}
    last_level = None
    while heap:
        d, u = heapq.heappop(heap)
        if u in settled:
            continue
        if len(settled) >= s and d > last_level:
            break
        settled[u] = d
        last_level = d
        for x, w in adj[u]:
            nd = d + w
            if x not in settled and nd < tentative.get(x, UNREACHABLE):
                tentative[x] = nd
                heapq.heappush(heap, (nd, x))
    items = sorted(((d, u) for u, d in settled.items()))[:s]
    return Neighborhood(v, direction, [(u, d) for d, u in items])


def eccentricity(g: Graph, v: int, direction: str = "out"):
    """max over u of d(v, u) (out) or d(u, v) (in); UNREACHABLE if any is."""
    return max(sssp(g, v, direction).dist, default=0)


def exact_eccentricities(g: Graph, direction: str = "out") -> list:
    """Exact per-vertex eccentricities via one search per vertex."""
    return [max(_distances(g, (v,), direction), default=0) for v in range(g.n)]


def exact_diameter(g: Graph):
    """Largest eccentricity; UNREACHABLE when some pair is unreachable."""
    if g.n == 0:
        return 0
    return max(exact_eccentricities(g, "out"))


def exact_radius(g: Graph):
    """Smallest out-eccentricity (Source Radius for directed graphs)."""
    if g.n == 0:
        return 0
    return min(exact_eccentricities(g, "out"))


def exact_st_diameter(g: Graph, S, T):
    """max over s in S, t in T of d(s, t), by one exact search per s."""
    S = sorted(set(S))
    T = sorted(set(T))
    if not S or not T:
        raise ValueError("S and T must be nonempty")
    best = 0
    for s in S:
        dist = _distances(g, (s,), "out")
        cand = max(dist[t] for t in T)
        if cand > best:
            best = cand
    return best


def apsp_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances by Floyd-Warshall relaxation on a dense matrix.

    Reference oracle, deliberately independent of the BFS/Dijkstra code
    paths above.  Entry [u, v] is d(u, v); unreachable pairs get np.inf.
    """
    n = g.n
    D = np.full((n, n), np.inf)
    if n == 0:
        return D
    np.fill_diagonal(D, 0.0)
    for u, v, w in g.edges:
        if w < D[u, v]:
            D[u, v] = w
        if not g.directed and w < D[v, u]:
            D[v, u] = w
    for k in range(n):
        np.minimum(D, D[:, k, None] + D[None, k, :], out=D)
    return D


def is_connected(g: Graph) -> bool:
    """Undirected connectivity (ignores arc directions for directed input)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v, _ in g.adj_out[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
        for v, _ in g.adj_in[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return all(seen)


def is_strongly_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    for direction in ("out", "in"):
        dist = _distances(g, (0,), direction)
        if any(d == UNREACHABLE for d in dist):
            return False
    return True


@dataclass
class BlowupMap:
    """Vertex bookkeeping for degree3_blowup.

    ``rep[v]`` is the representative node of original vertex v; distances
    between representatives equal original distances.  ``port[(v, e)]`` is
    the cycle node of v that carries original edge index e.
    """

    rep: list
    port: dict
    original_n: int


def degree3_blowup(g: Graph):
    """Replace each vertex of degree >= 3 by a cycle of 0-weight edges.

    Each cycle node carries exactly one original incident edge at its
    original weight, so every node of the result has degree <= 3 and all
    pairwise distances between representatives are preserved.  Vertices of
    degree <= 2 are kept as single nodes.
    """
    if g.directed:
        raise ValueError("degree3_blowup requires an undirected graph")
    incident = [[] for _ in range(g.n)]
    for e, (u, v, _) in enumerate(g.edges):
        if u == v:
            raise ValueError("self-loops are not supported by degree3_blowup")
        incident[u].append(e)
        incident[v].append(e)

    rep = [0] * g.n
    port = {}
    new_edges = []
    next_id = 0
    for v in range(g.n):
        deg = len(incident[v])
        if deg <= 2:
            rep[v] = next_id
            for e in incident[v]:
                port[(v, e)] = next_id
            next_id += 1
        else:
            base = next_id
            rep[v] = base
            for i, e in enumerate(incident[v]):
                port[(v, e)] = base + i
            for i in range(deg):
                new_edges.append((base + i, base + (i + 1) % deg, 0))
            next_id += deg
    for e, (u, v, w) in enumerate(g.edges):
        new_edges.append((port[(u, e)], port[(v, e)], w))
    return Graph(next_id, new_edges, directed=False), BlowupMap(rep, port, g.n)
