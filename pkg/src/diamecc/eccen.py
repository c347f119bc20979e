"""Eccentricity and Source Radius approximations for sparse directed graphs.

Three estimators, all one-sided (never above the true eccentricity):

* ecc_2approx      -- sampling + neighborhood sweep, factor 2.
* ecc_2plusdelta   -- threshold-decay peeling, factor 2/(1-tau).
* ecc_folklore_3approx -- single search from a root, factor 3, undirected.

Estimates are realized distances or exactly computed eccentricities, so
``estimate <= eccentricity`` holds unconditionally; the multiplicative
lower-bound guarantees hold whenever the sampled hitting sets do their
job (always, for the sample sizes used here, up to the usual with-high-
probability caveat).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .graph import UNREACHABLE, Graph
from .search import (eccentricity, is_strongly_connected, k_closest,
                     multi_source_distance, sssp)

# "end with |S| <= O(1)" cutoff for the threshold-decay estimator.
TERMINAL_SIZE = 4

# c in the ceil(c sqrt(n) ln n) and ceil(c ln n) sample sizes; c = 2 gives
# the standard 1 - 1/n hitting-set success probability.
SAMPLE_C = 2


@dataclass
class EccEstimate:
    """Per-vertex eccentricity estimates plus provenance.

    ``values`` are integers (or UNREACHABLE where flagged).  For the
    threshold-decay method ``rationals`` carries the exact pre-floor
    values and ``phases`` the number of peeling phases run.
    """

    values: list
    method: str
    seed: object = None
    rationals: list | None = None
    phases: int | None = None
    has_unreachable: bool = False
    # Phases whose sample provably missed the half-set it must hit; the
    # multiplicative guarantee is proven whenever this stays 0.
    sample_misses: int = 0


def _sqrt_sample_size(n: int) -> int:
    if n <= 1:
        return n
    return min(n, max(1, math.ceil(SAMPLE_C * math.sqrt(n) * math.log(n))))


def _log_sample_size(n: int) -> int:
    if n <= 1:
        return n
    return max(1, math.ceil(SAMPLE_C * math.log(n)))


def ceil_sqrt(n: int) -> int:
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def _argmax_min_id(values, candidates=None):
    best_v, best = None, None
    for v in candidates if candidates is not None else range(len(values)):
        if best is None or values[v] > best:
            best, best_v = values[v], v
    return best_v


def ecc_2approx(g: Graph, seed: int = 0) -> EccEstimate:
    """2-approximate all out-eccentricities: ecc(v)/2 <= est(v) <= ecc(v).

    Steps: sample S of size ~2 sqrt(n) ln n; take w maximizing d(S, w);
    compute exact eccentricities inside the ceil(sqrt(n)) closest
    in-neighborhood of w; estimate everything else by the largest realized
    distance into S union {w}.  The lower-bound guarantee needs S to hit
    every ceil(sqrt(n))-sized in-neighborhood, which the sample size makes
    overwhelmingly likely.
    """
    n = g.n
    if n == 0:
        return EccEstimate([], "ecc-2approx", seed)
    rng = Random(seed)
    sample = sorted(rng.sample(range(n), _sqrt_sample_size(n)))
    d_from_s = multi_source_distance(g, sample, "out").dist
    w = _argmax_min_id(d_from_s)
    near_w = set(k_closest(g, w, min(n, ceil_sqrt(n)), "in").vertices())

    est = [0] * n
    for v in near_w:
        est[v] = eccentricity(g, v, "out")
    probes = sorted(set(sample) | {w})
    for s in probes:
        into_s = sssp(g, s, "in").dist
        for v in range(n):
            if v not in near_w and into_s[v] > est[v]:
                est[v] = into_s[v]
    flagged = any(x == UNREACHABLE for x in est)
    return EccEstimate(est, "ecc-2approx", seed, has_unreachable=flagged)


def hitting_sample_ok(g: Graph, seed: int = 0) -> bool:
    """Check whether ecc_2approx's sample hit every ceil(sqrt(n)) in-neighborhood.

    Mirrors the sampling in ecc_2approx exactly (same seed, same draw), so
    a guarantee failure can be attributed to a provably missed neighborhood.
    """
    n = g.n
    if n == 0:
        return True
    rng = Random(seed)
    sample = set(rng.sample(range(n), _sqrt_sample_size(n)))
    size = min(n, ceil_sqrt(n))
    return all(sample.intersection(k_closest(g, u, size, "in").vertices())
               for u in range(n))


def ecc_2plusdelta(g: Graph, tau, seed: int = 0,
                   check_bound_invariant: bool = False) -> EccEstimate:
    """(2 + delta)-style estimator: (1-tau)/2 * ecc(v) <= est(v) <= ecc(v).

    Maintains an active set S (initially V) and a bound D on the largest
    eccentricity inside S, carried as an exact rational.  Each phase either
    halves S (assigning (1-tau)D/2 to the peeled far half) or certifies
    ecc <= (1-tau)D for the survivors and decays D.  The guarantee is on
    the exact rationals in ``rationals``; ``values`` floors them.

    Requires a strongly connected graph.  ``check_bound_invariant``
    recomputes all eccentricities up front and asserts ecc(v) <= D for
    every active v at each phase (debug aid for small graphs only).
    """
    tau = Fraction(tau)
    if not 0 < tau < 1:
        raise ValueError(f"tau must be in (0, 1), got {tau}")
    if not is_strongly_connected(g):
        raise ValueError("ecc_2plusdelta requires a strongly connected graph")
    n = g.n
    if n == 0:
        return EccEstimate([], "ecc-2plusdelta", seed, rationals=[], phases=0)
    rng = Random(seed)
    decay = 1 - tau
    bound = Fraction((n - 1) * g.max_weight)
    active = list(range(n))
    exact = [None] * n
    phases = 0
    misses = 0
    true_ecc = [eccentricity(g, v, "out") for v in range(n)] if check_bound_invariant else None

    while len(active) > TERMINAL_SIZE and bound >= 1:
        phases += 1
        if true_ecc is not None:
            assert all(true_ecc[v] <= bound for v in active)
        probe = sorted(rng.sample(active, min(len(active), _log_sample_size(n))))
        d_from_a = multi_source_distance(g, probe, "out").dist
        w = _argmax_min_id(d_from_a)
        to_w = sssp(g, w, "in").dist
        ordered = sorted(active, key=lambda v: (to_w[v], v))
        half = (len(active) + 1) // 2
        near_w, far_w = ordered[:half], ordered[half:]
        if not set(probe) & set(near_w):
            misses += 1
        threshold = decay * bound / 2
        if min(to_w[v] for v in far_w) >= threshold:
            for v in far_w:
                exact[v] = threshold
            active = sorted(near_w)
        else:
            reach = {}
            for x in probe:
                into_x = sssp(g, x, "in").dist
                for v in active:
                    if into_x[v] > reach.get(v, -1):
                        reach[v] = into_x[v]
            survivors = []
            for v in active:
                if reach[v] >= threshold:
                    exact[v] = threshold
                else:
                    survivors.append(v)
            active = survivors
            bound = decay * bound

    for v in active:
        # Endgame: exact computation when few survive, 0 when the bound
        # certifies ecc < 1 (integer weights make that ecc = 0).
        exact[v] = Fraction(eccentricity(g, v, "out")) if len(active) <= TERMINAL_SIZE else Fraction(0)
    values = [int(r.numerator // r.denominator) for r in exact]
    return EccEstimate(values, "ecc-2plusdelta", seed, rationals=exact,
                       phases=phases, sample_misses=misses)


def ecc_folklore_3approx(g: Graph) -> EccEstimate:
    """Folklore 3-approximation for undirected graphs: one search from id 0.

    est(v) = max(d(r, v), ecc(r) - d(r, v)) with r = 0; satisfies
    ecc(v)/3 <= est(v) <= ecc(v).
    """
    if g.directed:
        raise ValueError("ecc_folklore_3approx requires an undirected graph")
    if g.n == 0:
        return EccEstimate([], "ecc-folklore")
    from_r = sssp(g, 0, "out").dist
    if any(d == UNREACHABLE for d in from_r):
        raise ValueError("ecc_folklore_3approx requires a connected graph")
    ecc_r = max(from_r)
    est = [max(d, ecc_r - d) for d in from_r]
    return EccEstimate(est, "ecc-folklore")


def source_radius(g: Graph, method: str = "2approx", seed: int = 0, tau=None):
    """Approximate Source Radius: (vertex, exact eccentricity of that vertex).

    Runs the chosen eccentricities estimator, picks the vertex with the
    smallest estimate (ties to the smaller id), and recomputes its
    eccentricity exactly, so R <= value <= alpha * R for the method's alpha.
    """
    if g.n == 0:
        raise ValueError("source_radius needs a nonempty graph")
    if method == "2approx":
        est = ecc_2approx(g, seed)
    elif method == "2plusdelta":
        est = ecc_2plusdelta(g, tau if tau is not None else Fraction(1, 4), seed)
    else:
        raise ValueError(f"unknown method {method!r}")
    center = min(range(g.n), key=lambda v: (est.values[v], v))
    return center, eccentricity(g, center, "out")
