"""Shared corpus generators and independent reference oracles.

The generators are all seeded and deterministic.  The oracles here are
deliberately naive (edge-relaxation loops, exhaustive enumeration) so the
package's search code is checked against independent implementations.
"""

from __future__ import annotations

import math
from random import Random

from diamecc import Graph


def random_graph(rng: Random, n: int, m: int, directed: bool, max_w: int = 1) -> Graph:
    """Arbitrary (possibly disconnected) graph with m edges."""
    edges = []
    for _ in range(m):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        edges.append((u, v, rng.randint(0 if max_w == 0 else 1, max(max_w, 1))))
    return Graph(n, edges, directed=directed)


def random_strongly_connected(rng: Random, n: int, extra: int, max_w: int = 1) -> Graph:
    """Random digraph forced strongly connected via a hidden cycle."""
    perm = rng.sample(range(n), n)
    edges = [(perm[i], perm[(i + 1) % n], rng.randint(1, max_w)) for i in range(n)]
    if n == 1:
        edges = []
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v, rng.randint(1, max_w)))
    return Graph(n, edges, directed=True)


def random_connected(rng: Random, n: int, extra: int, max_w: int = 1) -> Graph:
    """Random connected undirected graph: spanning tree plus extras."""
    edges = [(i, rng.randrange(i), rng.randint(1, max_w)) for i in range(1, n)]
    seen = {(min(u, v), max(u, v)) for u, v, _ in edges}
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u != v and key not in seen:
            seen.add(key)
            edges.append((u, v, rng.randint(1, max_w)))
    return Graph(n, edges, directed=False)


def random_tree(rng: Random, n: int) -> Graph:
    return random_connected(rng, n, 0)


def path_graph(n: int, weights=None, directed: bool = False) -> Graph:
    ws = weights if weights is not None else [1] * (n - 1)
    return Graph(n, [(i, i + 1, ws[i]) for i in range(n - 1)], directed=directed)


def cycle_graph(n: int, directed: bool = False) -> Graph:
    return Graph(n, [(i, (i + 1) % n, 1) for i in range(n)], directed=directed)


def complete_graph(n: int, directed: bool = False) -> Graph:
    if directed:
        edges = [(u, v, 1) for u in range(n) for v in range(n) if u != v]
    else:
        edges = [(u, v, 1) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges, directed=directed)


def star_graph(n_leaves: int) -> Graph:
    return Graph(n_leaves + 1, [(0, i, 1) for i in range(1, n_leaves + 1)])


def bellman_ford(g: Graph, source: int, direction: str = "out") -> list:
    """Quadratic relaxation oracle, independent of the package's searches."""
    arcs = []
    for u, v, w in g.edges:
        arcs.append((u, v, w))
        if not g.directed:
            arcs.append((v, u, w))
    if direction == "in":
        arcs = [(v, u, w) for u, v, w in arcs]
    dist = [math.inf] * g.n
    dist[source] = 0
    for _ in range(max(g.n - 1, 0)):
        changed = False
        for u, v, w in arcs:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    return dist


def ov_brute_force_by_coordinates(vectors) -> bool:
    """Independent k-OV check: intersect the coordinate supports.

    A tuple is orthogonal iff no coordinate is 1 in all its members, i.e.
    the intersection of the chosen vectors' support sets is empty.
    Returns True iff some orthogonal tuple exists.
    """
    from itertools import product

    supports = [[frozenset(c for c, bit in enumerate(vec) if bit) for vec in group]
                for group in vectors]
    for choice in product(*supports):
        common = choice[0]
        for s in choice[1:]:
            common = common & s
            if not common:
                break
        if not common:
            return True
    return False
