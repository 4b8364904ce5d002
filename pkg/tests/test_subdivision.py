import itertools

from bananatree.graphs import Graph, Multigraph, cycle_graph, path_graph, petersen_graph
from bananatree.subdivision import (
    ImmersionEmbedding, SubdivisionEmbedding, SubdivisionSpec, build_k_nu_1, find_immersion,
    find_induced_subdivision, knu1_spec, subdivide, verify_immersion, verify_subdivision_embedding,
)

K3 = SubdivisionSpec.from_edges(3, [(0, 1), (1, 2), (0, 2)])
DIGON = SubdivisionSpec(Multigraph(2, ((0, 1), (0, 1))))


def isomorphic(g, h):
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    target = set(map(frozenset, h.edges()))
    return any(all(frozenset((p[u], p[v])) in target for u, v in g.edges())
               for p in itertools.permutations(range(g.n)))


def test_subdivide_examples():
    assert subdivide(K3, [1, 1, 1]).edge_count == 3
    c4 = subdivide(DIGON, [2, 2])
    assert c4.n == 4 and isomorphic(c4, cycle_graph(4))
    assert isomorphic(subdivide(K3, [2, 2, 2]), build_k_nu_1(3))


def test_knu1_examples():
    assert isomorphic(build_k_nu_1(3), cycle_graph(6))
    k4 = build_k_nu_1(4)
    assert (k4.n, k4.edge_count) == (10, 12)
    c4 = SubdivisionSpec.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    emb = find_induced_subdivision(build_k_nu_1(5), c4)
    assert emb is not None and verify_subdivision_embedding(build_k_nu_1(5), c4, emb)[0]
    assert knu1_spec(3).minimal_vertex_count() == 6


def test_find_induced_subdivision_examples():
    c6 = cycle_graph(6)
    emb = find_induced_subdivision(c6, K3)
    assert emb is not None and verify_subdivision_embedding(c6, K3, emb)[0]
    assert find_induced_subdivision(path_graph(6), K3) is None
    spec = SubdivisionSpec(Multigraph(2, ((0, 1), (0, 1))), (2, 3))
    pet = petersen_graph()
    emb = find_induced_subdivision(pet, spec)
    assert emb is not None
    assert sorted(len(p) - 1 for p in emb.paths) == [2, 3]
    assert verify_subdivision_embedding(pet, spec, emb)[0]


def test_verifier_mutations():
    c6 = cycle_graph(6)
    emb = find_induced_subdivision(c6, K3)
    ok, bad = verify_subdivision_embedding(c6.with_edges(add=[(0, 3)]), K3, emb)
    assert not ok and any(b.startswith("inducedness") for b in bad)
    strict = SubdivisionSpec.from_edges(3, [(0, 1, 3), (1, 2), (0, 2)])
    ok, bad = verify_subdivision_embedding(c6, strict, emb)
    assert not ok and any(b.startswith("length") for b in bad)


def test_immersion_examples():
    for nu in (3, 4):
        g = build_k_nu_1(nu)
        emb = find_immersion(g, nu)
        assert emb is not None and verify_immersion(g, emb)[0]
    assert find_immersion(path_graph(7), 3) is None
    # C_6 is K_3^1 itself, so it does carry a K_3 immersion; C_5 is one vertex short
    assert find_immersion(cycle_graph(6), 3) is not None
    assert find_immersion(cycle_graph(5), 3) is None
    bad = ImmersionEmbedding((0, 1, 2), {(0, 1): (0, 1), (0, 2): (0, 2), (1, 2): (1, 2)})
    assert not verify_immersion(cycle_graph(3), bad)[0]
