"""Sparse diameter estimators.

Both return realized eccentricities, so they never exceed the true
diameter D.  The folklore estimator guarantees out >= D/2 (and >= h+1
when D = 2h+1); the min-degree neighborhood sweep guarantees out >= h+1
whenever D = 2h is even, beating the folklore h on those inputs.
"""

from __future__ import annotations

from .graph import Graph
from .search import eccentricity


def diam_folklore_2approx(g: Graph):
    """max(out-ecc, in-ecc) of vertex 0; D/2 <= out <= D.

    Returns UNREACHABLE when vertex 0 cannot reach (or be reached by)
    some vertex.
    """
    if g.n == 0:
        return 0
    return max(eccentricity(g, 0, "out"), eccentricity(g, 0, "in"))


def diam_linear_lessthan2(g: Graph):
    """Eccentricity sweep over a minimum-degree vertex and its neighbors.

    Picks v minimizing in-degree + out-degree (ties to the smaller id) and
    returns the largest in- or out-eccentricity over v and every vertex
    sharing an edge with v.  For even diameter D = 2h the result is at
    least h + 1; for odd D it is still a valid lower bound (at most D).
    """
    if g.n == 0:
        return 0
    v = min(range(g.n), key=lambda x: (len(g.adj_out[x]) + len(g.adj_in[x]), x))
    around = {v}
    around.update(u for u, _ in g.adj_out[v])
    around.update(u for u, _ in g.adj_in[v])
    best = 0
    for w in sorted(around):
        best = max(best, eccentricity(g, w, "out"), eccentricity(g, w, "in"))
    return best
