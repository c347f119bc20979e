"""S-T Diameter estimators and the exact reduction to Diameter.

D_{S,T} = max over s in S, t in T of d(s, t).  Estimators return realized
S-to-T distances, hence never exceed the true value:

* st_3approx          -- two searches, D/3 <= out <= D.
* st_2approx_sqrt     -- sampling sweep, 2*floor(D/4) <= out <= D (unweighted).
* st_2approx_true     -- degree-3 blow-up variant, D/2 <= out <= D.
* st_2approx_weighted -- Dijkstra variant; true_mode gives D/2 <= out <= D.

st_via_diameter computes the S-T Diameter *exactly* given any exact
Diameter solver, via pendant-edge gadget graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .eccen import SAMPLE_C, ceil_sqrt
from .graph import UNREACHABLE, Graph
from .search import _distances, degree3_blowup, exact_st_diameter, is_connected, k_closest


@dataclass
class STInstance:
    """A graph with two nonempty vertex subsets (not necessarily disjoint)."""

    graph: Graph
    S: tuple
    T: tuple

    def __init__(self, graph: Graph, S, T):
        self.graph = graph
        self.S = tuple(sorted(set(S)))
        self.T = tuple(sorted(set(T)))
        if not self.S or not self.T:
            raise ValueError("S and T must be nonempty")
        for v in (self.S[0], self.S[-1], self.T[0], self.T[-1]):
            if not 0 <= v < graph.n:
                raise ValueError(f"vertex {v} out of range")


def st_3approx(inst: STInstance):
    """Linear-time 3-approximation; returns (estimate, witnessing (s, t) pair).

    Searches from the smallest-id s in S and t in T and takes the larger of
    the realized maxima, so D/3 <= estimate <= D.
    """
    g = inst.graph
    s, t = inst.S[0], inst.T[0]
    from_s = _distances(g, (s,), "out")
    to_t = _distances(g, (t,), "in")
    best_t = max(inst.T, key=lambda v: (from_s[v], -v))
    best_s = max(inst.S, key=lambda v: (to_t[v], -v))
    if from_s[best_t] >= to_t[best_s]:
        return from_s[best_t], (s, best_t)
    return to_t[best_s], (best_s, t)


def _sqrt_log_sample(rng: Random, n: int) -> list:
    if n <= 1:
        return list(range(n))
    size = min(n, max(1, math.ceil(SAMPLE_C * math.sqrt(n) * math.log(n))))
    return sorted(rng.sample(range(n), size))


def _two_approx_sweep(g: Graph, S, T, rng: Random, z_size: int, extend_positive: bool):
    """Core of the 2-approximation sweep on an undirected graph.

    One search per sample vertex, plus searches from the nearest-T /
    nearest-S pivots and from every vertex of the far-vertex neighborhood
    Y (extended with positive-weight neighbors in extend_positive mode).
    Returns the largest realized S-to-T distance found.
    """
    n = g.n
    cache = {}

    def dist_from(v):
        if v not in cache:
            cache[v] = _distances(g, (v,), "out")
        return cache[v]

    d1 = 0
    min_from_x = [UNREACHABLE] * n
    for x in _sqrt_log_sample(rng, n):
        dx = dist_from(x)
        for v in range(n):
            if dx[v] < min_from_x[v]:
                min_from_x[v] = dx[v]
        t_x = min(T, key=lambda t: (dx[t], t))
        d_tx = dist_from(t_x)
        d1 = max(d1, max(d_tx[s] for s in S))

    t_bar = max(T, key=lambda t: (min_from_x[t], -t))
    d_tbar = dist_from(t_bar)
    d2 = max(d_tbar[s] for s in S)

    near = k_closest(g, t_bar, min(n, z_size), "out").vertices()
    if extend_positive:
        extra = set(near)
        for z in near:
            for u, w in g.adj_out[z]:
                if w > 0:
                    extra.add(u)
        near = sorted(extra)
    for y in near:
        dy = dist_from(y)
        s_y = min(S, key=lambda s: (dy[s], s))
        d_sy = dist_from(s_y)
        d2 = max(d2, max(d_sy[t] for t in T))
    return max(d1, d2)


def st_2approx_sqrt(inst: STInstance, seed: int = 0):
    """Sampling 2-approximation for unweighted graphs: 2*floor(D/4) <= out <= D."""
    g = inst.graph
    if g.directed:
        raise ValueError("st_2approx_sqrt requires an undirected graph")
    if not g.unit_weights:
        raise ValueError("st_2approx_sqrt requires unit weights; use st_2approx_weighted")
    return _two_approx_sweep(g, inst.S, inst.T, Random(seed),
                             ceil_sqrt(g.n), extend_positive=False)


def st_2approx_true(inst: STInstance, seed: int = 0):
    """True 2-approximation for unweighted graphs: D/2 <= out <= D.

    Blows the graph up to maximum degree 3 with 0-weight cycles, then runs
    the sweep with the far-vertex neighborhood taken as the ceil(sqrt(m))
    closest vertices plus the endpoints of their weight-1 edges.
    """
    g = inst.graph
    if g.directed:
        raise ValueError("st_2approx_true requires an undirected graph")
    if not g.unit_weights:
        raise ValueError("st_2approx_true requires unit weights; use st_2approx_weighted")
    blown, bmap = degree3_blowup(g)
    S = sorted(bmap.rep[s] for s in inst.S)
    T = sorted(bmap.rep[t] for t in inst.T)
    return _two_approx_sweep(blown, S, T, Random(seed),
                             ceil_sqrt(max(blown.m, 1)), extend_positive=True)


def st_2approx_weighted(inst: STInstance, seed: int = 0, true_mode: bool = False):
    """Dijkstra-based sweep for nonnegative weights.

    In true_mode the far-vertex neighborhood uses the ceil(sqrt(m)) closest
    vertices extended by endpoints of their positive-weight edges, giving
    D/2 <= out <= D; otherwise only out <= D is promised (the additive
    slack of the weaker guarantee references an unidentified edge).
    """
    g = inst.graph
    if g.directed:
        raise ValueError("st_2approx_weighted requires an undirected graph")
    z = ceil_sqrt(max(g.m, 1)) if true_mode else ceil_sqrt(g.n)
    return _two_approx_sweep(g, inst.S, inst.T, Random(seed),
                             min(g.n, z), extend_positive=true_mode)


# ---------------------------------------------------------------------------
# Exact equivalence with Diameter
# ---------------------------------------------------------------------------


@dataclass
class EquivalenceGadget:
    """Gadget graphs reducing S-T Diameter to plain Diameter.

    All weights of the input are doubled up front (so the split weight
    half_span = span/2 is integral) and results must be halved back.
    ``w_scale`` strictly exceeds every finite distance of the doubled
    graph.  ``g_final`` is only built when the combined gadget's diameter
    collapses to the within-S diameter ``span`` (after the role swap that
    enforces span = max(D_S, D_T)).
    """

    w_scale: int           # W: pendant edge weight
    g_s: Graph | None      # pendants on S only (None when |S| < 2)
    g_t: Graph | None
    g_st: Graph            # pendants on both S and T
    g_final: Graph | None  # g_st plus x, y and the split edges
    s_order: tuple         # original id of the i-th S-pendant
    t_order: tuple
    s_pendants: tuple      # pendant ids in g_st / g_final
    t_pendants: tuple
    x: int | None
    y: int | None
    span_s: int            # D_S of the doubled graph (after swap)
    span_t: int
    swapped: bool


def _doubled(g: Graph) -> Graph:
    return Graph(g.n, [(u, v, 2 * w) for u, v, w in g.edges], directed=False)


def _with_pendants(g: Graph, groups, w_scale: int):
    """Append one pendant vertex per listed original vertex, per group.

    Returns the new graph plus, per group, the tuple of pendant ids
    (aligned with the group's order).
    """
    edges = list(g.edges)
    next_id = g.n
    pendant_ids = []
    for group in groups:
        ids = []
        for v in group:
            edges.append((next_id, v, w_scale))
            ids.append(next_id)
            next_id += 1
        pendant_ids.append(tuple(ids))
    return Graph(next_id, edges, directed=False), pendant_ids


def build_equivalence_gadget(inst: STInstance) -> EquivalenceGadget:
    """Construct the reduction gadgets, computing the spans exactly."""
    g = inst.graph
    if g.directed:
        raise ValueError("the equivalence reduction is for undirected graphs")
    if not is_connected(g):
        raise ValueError("the equivalence reduction requires a connected graph")
    g2 = _doubled(g)
    w_scale = max(2, g2.max_weight) * g2.n
    span_s = exact_st_diameter(g2, inst.S, inst.S) if len(inst.S) > 1 else 0
    span_t = exact_st_diameter(g2, inst.T, inst.T) if len(inst.T) > 1 else 0
    return _assemble_gadget(g2, inst.S, inst.T, w_scale, span_s, span_t)


def _assemble_gadget(g2, S, T, w_scale, span_s, span_t) -> EquivalenceGadget:
    swapped = span_t > span_s
    if swapped:
        S, T = T, S
        span_s, span_t = span_t, span_s
    g_s = _with_pendants(g2, [S], w_scale)[0] if len(S) > 1 else None
    g_t = _with_pendants(g2, [T], w_scale)[0] if len(T) > 1 else None
    g_st, (sp, tp) = _with_pendants(g2, [S, T], w_scale)
    # Split edges need span_s/2; doubling made every distance even.
    half = span_s // 2
    x = g_st.n
    y = g_st.n + 1
    edges = list(g_st.edges)
    edges.append((x, y, 2 * w_scale))
    for v in sp:
        edges.append((x, v, half))
    for v in tp:
        edges.append((y, v, half))
    g_final = Graph(g_st.n + 2, edges, directed=False)
    return EquivalenceGadget(w_scale, g_s, g_t, g_st, g_final,
                             tuple(S), tuple(T), sp, tp, x, y,
                             span_s, span_t, swapped)


def st_via_diameter(inst: STInstance, diameter_fn):
    """Exact S-T Diameter using only an exact Diameter solver.

    Stages: within-S span via g_s, within-T span via g_t, the combined
    gadget g_st, and, only when the combined diameter collapses to the
    larger span, the x/y-augmented graph.  Every stage feeds diameter_fn
    a plain Graph; 2*w_scale is subtracted from its answers and the final
    value is halved to undo the weight doubling.
    """
    g = inst.graph
    if g.directed:
        raise ValueError("the equivalence reduction is for undirected graphs")
    if not is_connected(g):
        raise ValueError("the equivalence reduction requires a connected graph")
    g2 = _doubled(g)
    w_scale = max(2, g2.max_weight) * g2.n
    S, T = inst.S, inst.T
    g_s = _with_pendants(g2, [S], w_scale)[0] if len(S) > 1 else None
    g_t = _with_pendants(g2, [T], w_scale)[0] if len(T) > 1 else None
    span_s = diameter_fn(g_s) - 2 * w_scale if g_s is not None else 0
    span_t = diameter_fn(g_t) - 2 * w_scale if g_t is not None else 0
    gadget = _assemble_gadget(g2, S, T, w_scale, span_s, span_t)
    combined = diameter_fn(gadget.g_st) - 2 * w_scale
    if combined > gadget.span_s:
        return combined // 2
    return (diameter_fn(gadget.g_final) - 2 * gadget.w_scale) // 2
