import itertools
import random

import pytest

from bananatree.extraction import HypothesisError, ImmersionFound, TooSmall
from bananatree.generators import (
    build_synthetic_pineapple_tree, plant_barren_path_instance, plant_gettree_instance,
)
from bananatree.graphs import (
    RootedTree, complete_graph, members, rooted_path, set_distance, uniform_tree,
)
from bananatree.invariants import chi
from bananatree.pineapple import (
    PineappleTree, aligned_triples, barren_to_immersion, classify_triples, gettree, is_pruned,
    leaf_separation, platonic, prune, summary, summary_from_tree, tree_kind, treeramsey,
    uniform_shape, verify_pineapple_tree,
)
from bananatree.subdivision import verify_immersion

CHERRY = RootedTree.from_parents([-1, 0, 0])


def test_synthetic_round_trip_and_json():
    g, pt = build_synthetic_pineapple_tree(uniform_tree(2, 2), flavour="mixed", seed=3)
    assert verify_pineapple_tree(pt)[0]
    back = PineappleTree.from_json(pt.to_json(), g)
    assert back.X == pt.X and back.C == pt.C and verify_pineapple_tree(back)[0]


def test_mutations_rejected():
    g, pt = build_synthetic_pineapple_tree(CHERRY, flavour="fruitful")
    u = 1
    c = members(pt.C[u])[0]
    x = members(g.adj[c] & pt.X[0])[0]
    ok, bad = verify_pineapple_tree(PineappleTree(pt.shape, g.with_edges(remove=[(x, c)]), pt.X, pt.Y, pt.C, pt.z0))
    assert not ok and any(b.startswith("leaf-cover") for b in bad)
    a, b = members(pt.C[1])[0], members(pt.C[2])[0]
    ok, bad = verify_pineapple_tree(PineappleTree(pt.shape, g.with_edges(add=[(a, b)]), pt.X, pt.Y, pt.C, pt.z0))
    assert not ok and any(x.startswith("incomparable-edge") for x in bad)


def test_classify_flavours():
    shape = rooted_path(2)
    _, fr = build_synthetic_pineapple_tree(shape, flavour="fruitful")
    assert set(classify_triples(fr).values()) == {"all"}
    _, ba = build_synthetic_pineapple_tree(CHERRY, flavour="barren")
    assert set(classify_triples(ba).values()) <= {"none"}
    _, bp = build_synthetic_pineapple_tree(rooted_path(3), flavour="barren")
    assert set(classify_triples(bp).values()) == {"none"}
    tri = aligned_triples(rooted_path(3))[0]
    _, mx = build_synthetic_pineapple_tree(rooted_path(3), pattern={tri: "mixed"})
    assert classify_triples(mx)[tri] == "mixed" and tree_kind(mx) == "unpruned"


def test_gettree_single_vertex():
    g = complete_graph(4)
    pt = gettree(g, range(4), RootedTree.from_parents([-1]), 3, 3, 1, 4)
    assert pt.C[0] == g.all
    assert isinstance(gettree(g, range(4), RootedTree.from_parents([-1]), 3, 4, 1, 5), TooSmall)


@pytest.mark.parametrize("shape", [CHERRY, uniform_tree(3, 1), uniform_tree(2, 2),
                                   RootedTree.from_parents([-1, 0, 0, 1, 1])])
def test_gettree_planted(shape):
    g, b = plant_gettree_instance(shape, d=2)
    pt = gettree(g, b["Z"], b["shape"], b["nu"], b["c"], b["d"], b["tau"])
    assert isinstance(pt, PineappleTree)
    assert verify_pineapple_tree(pt)[0]
    assert leaf_separation(pt) >= b["d"] + 1
    assert all(chi(g, pt.C[u]) > b["c"] for u in shape.leaves())


def test_prune_examples():
    _, fr = build_synthetic_pineapple_tree(rooted_path(3), flavour="fruitful")
    res = prune(fr)
    assert res.tree.X == fr.X and res.tree.C == fr.C
    tri = aligned_triples(rooted_path(3))[0]
    _, mx = build_synthetic_pineapple_tree(rooted_path(3), {"attach": "pendant", "blob": [2, 2]},
                                          pattern={tri: "mixed"})
    res = prune(mx)
    assert is_pruned(res.tree) and sum(res.splits.values()) == 1
    assert verify_pineapple_tree(res.tree)[0]


def test_treeramsey_examples():
    res = treeramsey(RootedTree.from_parents([-1]), {0: 5}, 1)
    assert res.vertices == (0,) and res.colour == 5
    t = uniform_tree(2, 1)
    for cols in itertools.product([1, 2], repeat=2):
        res = treeramsey(t, dict(zip(t.leaves(), cols)), 1)
        assert res.vertices[0] == 0 and len(res.vertices) == 2
        assert res.vertices[1] == 1 if cols[0] == cols[1] else True
    t = uniform_tree(4, 1)
    for cols in itertools.product([1, 2], repeat=4):
        res = treeramsey(t, dict(zip(t.leaves(), cols)), 2)
        sub, keep = res.tree(t)
        assert uniform_shape(sub) == (2, 1)
        assert {cols[t.leaves().index(v)] for v in keep[1:]} == {res.colour}


def test_platonic_with_small_alphabet():
    g, b = plant_gettree_instance(uniform_tree(2, 2), d=2)
    out = platonic(g, b["Z"], rooted_path(1), 3, b["c"], 2, b["tau"], q=2)
    assert isinstance(out, PineappleTree)
    assert tree_kind(out) in ("barren", "fruitful")
    assert verify_pineapple_tree(out)[0]
    with pytest.raises(HypothesisError):
        platonic(g, b["Z"], rooted_path(2), 3, b["c"], 2, b["tau"])


@pytest.mark.parametrize("n", [2, 3])
def test_barren_to_immersion(n):
    g, b = plant_barren_path_instance(n)
    pt = b["tree"]
    assert tree_kind(pt) == "barren" and chi(g, pt.C[pt.shape.leaves()[0]]) > n * b["tau"]
    out = barren_to_immersion(pt, n)
    assert isinstance(out, ImmersionFound) and verify_immersion(g, out.embedding)[0]


def test_barren_to_immersion_rejects_fruitful():
    _, pt = build_synthetic_pineapple_tree(rooted_path(3), {"blob": [3], "attach": "pendant"},
                                           flavour="fruitful")
    with pytest.raises(HypothesisError):
        barren_to_immersion(pt, 3)


def test_summary_from_tree():
    _, fr = build_synthetic_pineapple_tree(rooted_path(3), flavour="fruitful")
    assert summary_from_tree(fr, 2) is fr
    g, b = plant_barren_path_instance(3)
    out = summary_from_tree(b["tree"], 3)
    assert isinstance(out, ImmersionFound) and verify_immersion(g, out.embedding)[0]
    g4 = complete_graph(3)
    assert isinstance(summary(g4, range(3), rooted_path(0), 3, 3, 1, 4), TooSmall)
