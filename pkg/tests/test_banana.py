import pytest

from bananatree.banana import (
    Banana, BananaPath, BananaTree, InternalRoute, LimbFamily, banana_tree_spec, bigshare,
    extract_banana_cycle, extract_banana_tree, extract_fat_triangle, getforest, internalroute,
    limbs_share_end, orthogonal, overlap_graph, verify_banana, verify_banana_path,
    verify_banana_tree, verify_internal_route,
)
from bananatree.extraction import HypothesisError, SubdivisionFound, TooSmall
from bananatree.generators import (
    build_synthetic_pineapple_tree, plant_banana_tree_instance, plant_bigshare_instance,
    plant_fat_cycle_instance, plant_fat_triangle_instance, plant_internalroute_instance,
)
from bananatree.graphs import Graph, RootedTree, cycle_graph, path_graph, rooted_path, uniform_tree
from bananatree.subdivision import verify_subdivision_embedding


def test_banana_on_c6():
    c6 = cycle_graph(6)
    b = Banana((0, 3), ((0, 1, 2, 3), (0, 5, 4, 3)))
    assert verify_banana(c6, b)[0] and b.thickness == 2
    ok, bad = verify_banana(c6.with_edges(add=[(1, 5)]), b)
    assert not ok and any(x.startswith("induced") for x in bad)


def test_orthogonality():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    b1 = Banana((0, 2), ((0, 1, 2),))
    b2 = Banana((2, 4), ((2, 3, 4),))
    assert orthogonal(g, b1, b2)[0]
    assert verify_banana_path(g, BananaPath((0, 2, 4), (b1, b2)))[0]
    assert verify_banana_tree(g, BananaTree(path_graph(3), (0, 2, 4), (b1, b2)))[0]
    b3 = Banana((1, 3), ((1, 2, 3),))
    ok, bad = orthogonal(g, b1, b3)
    assert not ok and any("not a common end" in x for x in bad)


def test_overlap_examples():
    # two limbs along one path: root 0 - 1 - 2 - 3 - 4 (leaf), second leaf 5 below 3
    t = RootedTree.from_parents([-1, 0, 1, 2, 3, 3])
    fam = LimbFamily(t, ((4, 0), (5, 0)))
    assert overlap_graph(fam, 3).edges() == [(0, 1)]
    assert overlap_graph(fam, 4).edges() == []
    t2 = RootedTree.from_parents([-1, 0, 1, 0, 3])
    assert overlap_graph(LimbFamily(t2, ((2, 1), (4, 3))), 1).edges() == []
    # a third limb covering every shared vertex kills the edge
    fam3 = LimbFamily(t, ((4, 0), (5, 0), (4, 1)))
    assert overlap_graph(fam3, 1).edges() == []


def test_getforest_examples():
    fam, iso = getforest(Graph(1), 2)
    assert len(fam.limbs) == 1 and overlap_graph(fam, 2).edge_count == 0
    fam, iso = getforest(path_graph(2), 3)
    assert overlap_graph(fam, 3).edges() == [(0, 1)]
    assert overlap_graph(fam, 4).edges() == []
    assert not limbs_share_end(fam)
    with pytest.raises(HypothesisError):
        getforest(cycle_graph(3), 1)


def test_bigshare_two_limbs():
    g, b = plant_bigshare_instance(2, 2)
    assert len(b["W"]) == 2
    qa, qb, ban = bigshare(b["tree"], b["limbs"], b["anchors"], b["W"], b["I"], b["J"], 2)
    assert (qa, qb) == (0, 1) and ban.thickness == 2 and verify_banana(g, ban)[0]


def test_bigshare_three_limbs():
    g, b = plant_bigshare_instance(2, 3)
    qa, qb, ban = bigshare(b["tree"], b["limbs"], b["anchors"], b["W"], b["I"], b["J"], 2)
    assert verify_banana(g, ban)[0]
    third = [b["anchors"][q] for q in range(3) if q not in (qa, qb)][0]
    assert not g.neighbourhood(ban.vertices()) >> third & 1


def test_bigshare_size_guard():
    g, b = plant_bigshare_instance(2, 2)
    with pytest.raises(HypothesisError, match="size"):
        bigshare(b["tree"], b["limbs"], b["anchors"], b["W"][:1], b["I"], b["J"], 2)


def test_internalroute():
    g, b = plant_internalroute_instance(2, 4, 1)
    r = internalroute(g, b["X"], b["Z"], b["rho"], b["tau"], b["n"])
    assert isinstance(r, InternalRoute) and len(r.xs) == 2
    assert verify_internal_route(g, b["X"], b["Z"], b["rho"], r)[0]
    one = internalroute(g, b["X"], b["Z"], 4, 1, 1)
    assert len(one.xs) == 1
    assert isinstance(internalroute(g, b["X"], b["Z"], 4, 2, 2), TooSmall)
    with pytest.raises(HypothesisError):
        internalroute(g, b["X"][:3], b["Z"], 4, 1, 2)


def test_banana_tree_single_banana():
    g, b = plant_banana_tree_instance(path_graph(2), 2, (1, 2))
    out = extract_banana_tree(b["tree"], b["limbs"], b["iso"], b["skeleton"], b["spec"], b["n"])
    assert isinstance(out, SubdivisionFound)
    assert verify_subdivision_embedding(g, out.spec, out.embedding)[0]


def test_banana_tree_p3():
    g, b = plant_banana_tree_instance(path_graph(3), 2, (1, 2))
    assert b["n"] == 5
    out = extract_banana_tree(b["tree"], b["limbs"], b["iso"], b["skeleton"], b["spec"], b["n"])
    assert verify_subdivision_embedding(g, out.spec, out.embedding)[0]


def test_banana_tree_rejects_non_fruitful():
    fam, iso = getforest(path_graph(2), 4)
    g, pt = build_synthetic_pineapple_tree(fam.tree, {"blob": [1], "attach": 1}, flavour="barren")
    with pytest.raises(HypothesisError, match="fruitful"):
        extract_banana_tree(pt, fam, iso, path_graph(2), banana_tree_spec(path_graph(2), 2, [1, 2]), 4)


@pytest.mark.parametrize("m", [2, 3])
def test_banana_cycle(m):
    g, b = plant_fat_cycle_instance(m, 3)
    out = extract_banana_cycle(b["tree"], m, 3)
    assert verify_subdivision_embedding(g, out.spec, out.embedding)[0]
    assert len(out.embedding.branch_map) == m


def test_banana_cycle_wrong_shape():
    g, pt = build_synthetic_pineapple_tree(uniform_tree(2, 2), flavour="fruitful")
    with pytest.raises(HypothesisError, match="shape"):
        extract_banana_cycle(pt, 2, 3)


def test_fat_triangle():
    g, b = plant_fat_triangle_instance(3)
    out = extract_fat_triangle(b["tree"], 3, 1)
    assert isinstance(out, SubdivisionFound)
    assert verify_subdivision_embedding(g, out.spec, out.embedding)[0]
    assert len(out.spec.edges) == 3 + 3 + 2


def test_fat_triangle_rejects_non_path():
    g, pt = build_synthetic_pineapple_tree(uniform_tree(2, 2), flavour="fruitful")
    with pytest.raises(HypothesisError):
        extract_fat_triangle(pt, 3, 1)
