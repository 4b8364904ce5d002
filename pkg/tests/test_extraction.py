import random

import pytest

from bananatree.extraction import (
    DenseBall, DistantFamily, DistantPair, HypothesesUnmet, Star, SubdivisionFound, TooSmall,
    getstar, moredistant_split, router_find_knu1, router_hypotheses, verify_outcome, verify_star,
)
from bananatree.generators import k4_necklace, plant_router_instance, plant_two_blob_instance
from bananatree.graphs import Graph, complete_graph, distances_from, star_graph
from bananatree.invariants import chi
from bananatree.extraction import distant_split


def spider(legs, length):
    edges, n = [], 1
    ends = []
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, n))
            prev, n = n, n + 1
        ends.append(prev)
    return Graph(n, edges), ends


def test_star_on_k1s():
    g = star_graph(4)
    st = getstar(g, 0, [1, 2, 3, 4], 1, 4)
    assert isinstance(st, Star) and st.center == 0
    assert all(len(p) == 2 for p in st.spokes)
    assert verify_star(g, st, 1)[0]


def test_star_on_spider():
    g, ends = spider(3, 2)
    st = getstar(g, 0, ends, 2, 3)
    assert st.center == 0 and sorted(st.targets) == sorted(ends)
    assert verify_star(g, st, 2)[0]


def test_star_on_random_trees():
    rng = random.Random(5)
    for trial in range(30):
        n = rng.randrange(6, 16)
        g = Graph(n, [(rng.randrange(i), i) for i in range(1, n)])
        dist = distances_from(g, [0])
        targets = [v for v in range(1, n) if dist[v] <= 2]
        if len(targets) < 2:
            continue
        st = getstar(g, 0, targets, 2, 2)
        if isinstance(st, Star):
            assert verify_star(g, st, 2)[0]
        else:
            # exhaustive oracle: no centre sees two targets along disjoint shortest spokes
            assert st.given < st.needed


def test_router_engineered_instance():
    g, inst = plant_router_instance(3, 3)
    assert router_hypotheses(g, inst["X"], inst["v"], 2) == []
    out = router_find_knu1(g, inst["X"], inst["v"], 2, 3)
    assert isinstance(out, SubdivisionFound)
    assert verify_outcome(g, out)[0]


def test_router_reports_violations():
    g, inst = plant_router_instance(3, 3)
    xs = inst["X"]
    xs = [xs[0], xs[1] + [inst["v"][0]], xs[2]]
    out = router_find_knu1(g, xs, inst["v"], 2, 3)
    assert isinstance(out, HypothesesUnmet)
    assert any("X_0 and X_1" in v or "X_1 and X_2" in v for v in out.violations)
    few = router_find_knu1(g, inst["X"][:2], inst["v"], 2, 3)
    assert isinstance(few, HypothesesUnmet) and "insufficient" in few.violations[0]


def test_distant_split_too_small_cases():
    k4 = complete_graph(4)
    out = distant_split(k4, range(4), 3, 1, 3, 10)
    assert isinstance(out, TooSmall) and out.chi == 4
    out = distant_split(k4, [], 3, 1, 3, 10)
    assert isinstance(out, TooSmall) and out.chi == 0


@pytest.mark.parametrize("seed", range(5))
def test_distant_split_two_blobs(seed):
    g = plant_two_blob_instance(1, 4, seed)
    out = distant_split(g, range(g.n), 3, 1, 3, 10)
    assert isinstance(out, DistantPair)
    assert verify_outcome(g, out, range(g.n))[0]
    dense = distant_split(g, range(g.n), 3, 1, 3, 1)
    assert isinstance(dense, DenseBall) and verify_outcome(g, dense)[0]


def test_distant_split_proof_mode():
    g = k4_necklace(6, 6)
    out = distant_split(g, range(g.n), 3, 1, 3, 4, k=1, ell=1, check_balls=False)
    assert verify_outcome(g, out, range(g.n))[0]
    assert isinstance(out, (DistantPair, SubdivisionFound))


def test_moredistant():
    g = k4_necklace(4, 8)
    z = range(g.n)
    one = moredistant_split(g, z, 3, 1, 1, 3, 10)
    assert isinstance(one, DistantFamily) and one.sets == (g.all,)
    two = moredistant_split(g, z, 3, 2, 1, 3, 10)
    assert verify_outcome(g, two, z)[0]
    three = moredistant_split(g, z, 3, 3, 1, 3, 10)
    assert isinstance(three, DistantFamily) and len(three.sets) == 3
    assert verify_outcome(g, three, z)[0]
    assert all(chi(g, s) == 4 for s in three.sets)
