"""Centers, bunches/clusters, additive-2 spanner, dense estimators."""

from __future__ import annotations

import math
from random import Random

import numpy as np
import pytest

from conftest import complete_graph, path_graph, random_connected, star_graph
from diamecc import (Graph, additive2_spanner, apsp_matrix, approx_on_spanner,
                     diam_dense_32, diam_folklore_2approx, ecc_dense_53,
                     exact_diameter, exact_eccentricities, tz_center,
                     st_3approx, STInstance)
from diamecc.dense import _cluster_matrix


def check_center_invariants(g, cd):
    n = g.n
    b = math.ceil(1 / cd.p)
    center_set = set(cd.centers)
    for v in range(n):
        assert len(cd.bunches[v]) <= b
        assert not center_set & {u for u, _ in cd.bunches[v]}  # no center can be closer than d(v, A)
        if v not in center_set:
            assert any(d == 0 for u, d in cd.bunches[v] if u == v)  # v in own bunch
        else:
            assert cd.bunches[v] == []
    for w in range(n):
        assert len(cd.clusters[w]) <= 4 / cd.p
    # Clusters are the exact inverse of bunches.
    inv = [[] for _ in range(n)]
    for v in range(n):
        for u, du in cd.bunches[v]:
            inv[u].append((v, du))
    assert inv == cd.clusters


class TestTZCenter:
    def test_complete_graph(self):
        g = complete_graph(9)
        cd = tz_center(g, 1 / 3, seed=0)
        check_center_invariants(g, cd)
        for v in range(9):
            assert all(u == v for u, _ in cd.bunches[v])  # bunch within self

    def test_path_sixteen(self):
        g = path_graph(16)
        cd = tz_center(g, 1 / 4, seed=0)
        check_center_invariants(g, cd)

    def test_star_hits_every_leaf_neighborhood(self):
        from diamecc import k_closest
        g = star_graph(10)
        cd = tz_center(g, 1 / 3, seed=0)
        b = math.ceil(3)
        centers = set(cd.centers)
        for v in range(g.n):
            assert centers & set(k_closest(g, v, b).vertices())

    def test_random_graphs_many_p(self):
        rng = Random(40)
        for trial in range(15):
            n = rng.randint(4, 70)
            g = random_connected(rng, n, rng.randint(0, 3 * n))
            for p in (0.5, 0.25, 1 / math.ceil(math.sqrt(n))):
                cd = tz_center(g, p, seed=trial)
                check_center_invariants(g, cd)

    def test_pivot_is_nearest_center_smallest_id(self):
        rng = Random(41)
        g = random_connected(rng, 30, 40)
        cd = tz_center(g, 0.3, seed=0)
        D = apsp_matrix(g)
        for v in range(30):
            best = min((D[v, a], a) for a in cd.centers)
            assert (cd.dist[v], cd.pivot[v]) == best

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            tz_center(path_graph(4), 0.0)
        with pytest.raises(ValueError):
            tz_center(Graph(3, [(0, 1, 2), (1, 2, 2)]), 0.5)
        with pytest.raises(ValueError):
            tz_center(Graph(3, [(0, 1, 1)]), 0.5)


class TestSpanner:
    def test_tree_kept_whole(self):
        rng = Random(42)
        g = random_connected(rng, 25, 0)
        h = additive2_spanner(g).graph
        assert sorted((min(u, v), max(u, v)) for u, v, _ in h.edges) == \
               sorted((min(u, v), max(u, v)) for u, v, _ in g.edges)

    def test_complete_graph(self):
        g = complete_graph(25)
        sp = additive2_spanner(g)
        assert sp.graph.m <= 8 * 25 ** 1.5 * math.log(25)
        assert apsp_matrix(sp.graph).max() <= 3

    def test_additive_two_random(self):
        rng = Random(43)
        for _ in range(20):
            n = rng.randint(2, 55)
            g = random_connected(rng, n, rng.randint(0, n * n // 4))
            h = additive2_spanner(g).graph
            assert np.all(apsp_matrix(h) <= apsp_matrix(g) + 2)
            assert h.m <= 8 * n ** 1.5 * max(math.log(n), 1)


class TestClusterMatrix:
    def test_intersecting_bunches_give_exact_distance(self):
        rng = Random(44)
        for trial in range(12):
            n = rng.randint(4, 50)
            g = random_connected(rng, n, rng.randint(0, 2 * n))
            cd = tz_center(g, 1 / math.sqrt(n), seed=trial)
            M = _cluster_matrix(g, cd)
            D = apsp_matrix(g)
            bunch_sets = [frozenset(u for u, _ in cd.bunches[v]) for v in range(n)]
            for u in range(n):
                for v in range(u + 1, n):
                    if bunch_sets[u] & bunch_sets[v]:
                        assert M[u, v] == D[u, v]
                    else:
                        assert cd.dist[u] + cd.dist[v] - 1 <= D[u, v]
                        assert M[u, v] <= D[u, v]

    def test_no_entry_exceeds_distance(self):
        rng = Random(45)
        g = random_connected(rng, 40, 60)
        cd = tz_center(g, 0.2, seed=1)
        M = _cluster_matrix(g, cd)
        D = apsp_matrix(g)
        assert (M <= D).all()


class TestDenseDiameter:
    def test_path_ten(self):
        est = diam_dense_32(path_graph(10), seed=0)
        assert 5 <= est <= 9  # D = 9 = 3*3 + 0 so the floor is 2h - 1 = 5

    def test_complete_graph(self):
        est = diam_dense_32(complete_graph(12), seed=0)
        assert 0 <= est <= 1

    def test_bound_random(self):
        rng = Random(46)
        for trial in range(30):
            n = rng.randint(2, 70)
            g = random_connected(rng, n, rng.randint(0, 3 * n))
            D = exact_diameter(g)
            h, z = divmod(D, 3)
            floor = 2 * h - 1 if z in (0, 1) else 2 * h
            est = diam_dense_32(g, seed=trial)
            assert floor <= est <= D


class TestDenseEccentricities:
    def test_path_eleven_endpoint(self):
        est = ecc_dense_53(path_graph(11), seed=0)
        assert 5 <= est.values[0] <= 10

    def test_complete_graph_upper(self):
        g = complete_graph(10)
        est = ecc_dense_53(g, seed=0)
        ecc = exact_eccentricities(g)
        assert all(est.values[v] <= ecc[v] for v in range(10))

    def test_bound_random(self):
        rng = Random(47)
        for trial in range(30):
            n = rng.randint(2, 70)
            g = random_connected(rng, n, rng.randint(0, 3 * n))
            ecc = exact_eccentricities(g)
            est = ecc_dense_53(g, seed=trial)
            for u in range(n):
                assert 5 * est.values[u] >= 3 * ecc[u] - 5
                assert est.values[u] <= ecc[u]


class TestSpannerComposition:
    def test_exact_inner_on_path(self):
        g = path_graph(8)
        value = approx_on_spanner(g, exact_diameter, seed=0)
        assert value == 5  # spanner of a path is the path; 7 - 2

    def test_st3_inner(self):
        rng = Random(48)
        for trial in range(10):
            n = rng.randint(3, 40)
            g = random_connected(rng, n, rng.randint(0, 2 * n))
            D = exact_diameter(g)

            def inner(h):
                return st_3approx(STInstance(h, range(h.n), range(h.n)))[0]

            value = approx_on_spanner(g, inner, seed=trial)
            assert value <= D
            assert 3 * value >= D - 6  # D/3 - 2 <= value

    def test_folklore_inner(self):
        rng = Random(49)
        for trial in range(10):
            n = rng.randint(2, 40)
            g = random_connected(rng, n, rng.randint(0, 2 * n))
            D = exact_diameter(g)
            value = approx_on_spanner(g, diam_folklore_2approx, seed=trial)
            assert value <= D
            assert 2 * value >= D - 4  # D/2 - 2 <= value
