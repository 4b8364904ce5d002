import itertools

from bananatree.banana import internalroute
from bananatree.generators import (
    build_synthetic_pineapple_tree, grotzsch_graph, k4_necklace, mycielski,
    plant_bigshare_instance, plant_internalroute_instance, random_graph, section9_host,
    shift_graph,
)
from bananatree.graphs import RootedTree, complete_graph, cycle_graph, members
from bananatree.invariants import chi, clique_number
from bananatree.pineapple import classify_triples, verify_pineapple_tree


def isomorphic(g, h):
    target = set(map(frozenset, h.edges()))
    return g.n == h.n and g.edge_count == h.edge_count and any(
        all(frozenset((p[u], p[v])) in target for u, v in g.edges())
        for p in itertools.permutations(range(g.n)))


def test_mycielski_family():
    m0 = mycielski(0)
    assert m0.n == 2 and chi(m0) == 2
    assert isomorphic(mycielski(1), cycle_graph(5))
    gr = grotzsch_graph()
    assert gr.n == 11 and chi(gr) == 4 and clique_number(gr)[0] == 2


def brute_chi(g):
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k


def test_shift_graphs():
    # (i, j) ~ (j, k): on n = 3 only (1,2)-(2,3) is an edge
    s3 = shift_graph(3)
    assert s3.n == 3 and s3.edges() == [(0, 2)]
    s4 = shift_graph(4)
    assert brute_chi(s4) == 2 == chi(s4)
    s8 = shift_graph(8)
    assert chi(s8) == 3 and clique_number(s8)[0] == 2


def test_necklace_and_random():
    g = k4_necklace(3, 4)
    assert chi(g) == 4 and g.n == 12 + 2 * 3
    ring = k4_necklace(3, 4, closed=True)
    assert ring.edge_count == g.edge_count + 4
    assert random_graph(10, 0.3, 7).edges() == random_graph(10, 0.3, 7).edges()


def test_synthetic_single_vertex_and_wiring():
    g, pt = build_synthetic_pineapple_tree(RootedTree.from_parents([-1]), {"blob": 4})
    assert pt.C[0] == g.all and g.edge_count == 6
    _, fr = build_synthetic_pineapple_tree(RootedTree.from_parents([-1, 0, 1]), flavour="fruitful")
    assert verify_pineapple_tree(fr)[0]
    _, ba = build_synthetic_pineapple_tree(RootedTree.from_parents([-1, 0, 0]), flavour="barren")
    assert all(v == "none" for v in classify_triples(ba).values())


def test_planted_hypotheses():
    g, b = plant_bigshare_instance(2, 2)
    assert len(b["W"]) == 2 > (2 - 1) * 2 * 1 // 2
    g, b = plant_internalroute_instance(2, 4, 1)
    assert all(g.adj[z] & sum(1 << x for x in b["X"]) for z in b["Z"])
    assert internalroute(g, b["X"], b["Z"], 4, 1, 2).xs


def test_section9_host():
    h = section9_host(4)
    assert h.n == 6
    a = 4
    assert len({v for e in h.edges if a in e for v in e if v != a}) == 3
    h5 = section9_host(5)
    assert (h5.n, len(h5.edges)) == (7, 2 * 4 + 5)
