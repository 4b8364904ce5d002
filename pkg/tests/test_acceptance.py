"""The ten acceptance criteria, one test each; every test records a pass/fail
line that is printed in the terminal summary."""
import itertools
import json
import os
import random
import subprocess
import sys
import time

import networkx as nx
import pytest

from conftest import ACCEPTANCE

from bananatree import constants
from bananatree.banana import (
    extract_banana_cycle, extract_banana_tree, extract_fat_triangle, getforest, limbs_share_end,
    overlap_graph,
)
from bananatree.certificates import encode
from bananatree.cli import main as cli_main
from bananatree.extraction import distant_split, verify_outcome
from bananatree.generators import (
    build_synthetic_pineapple_tree, grotzsch_graph, plant_banana_tree_instance,
    plant_barren_path_instance, plant_fat_cycle_instance, plant_fat_triangle_instance,
    plant_two_blob_instance, random_graph, random_shape, relabel_seeded,
)
from bananatree.graphs import (
    Graph, components, diameter, is_connected, members, path_graph, uniform_tree, write_graph,
)
from bananatree.invariants import chi, chi_rho, clique_number, ramsey_bound
from bananatree.pineapple import (
    aligned_triples, barren_to_immersion, classify_triples, prune, treeramsey, uniform_shape,
    verify_pineapple_tree,
)
from bananatree.subdivision import build_k_nu_1, find_immersion, verify_immersion

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def report(num, ok, detail):
    ACCEPTANCE[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")


def from_nx(h):
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def has_induced_cycle(g):
    # direct enumeration: some vertex subset induces a connected 2-regular graph
    for r in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            m = sum(1 << v for v in sub)
            if all(bin(g.adj[v] & m).count("1") == 2 for v in sub) and is_connected(g, m):
                return True
    return False


def test_criterion_1_subdivision_oracle(tmp_path, capsys):
    start = time.time()
    atlas = nx.graph_atlas_g()
    on_seven = sum(1 for h in atlas if h.number_of_nodes() == 7)
    spec = tmp_path / "k3.json"
    spec.write_text(json.dumps({"n": 3, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, 1]]}))
    gpath = str(tmp_path / "g.txt")
    disagree = 0
    for h in atlas:
        g = from_nx(h)
        write_graph(g, gpath)
        code = cli_main(["find-subdivision", "--graph", gpath, "--spec", str(spec)])
        out = json.loads(capsys.readouterr().out)
        found = code == 0 and out["kind"] == "subdivision"
        disagree += found != has_induced_cycle(g)
    secs = time.time() - start
    ok = disagree == 0 and on_seven == 1044 and secs < 120
    report(1, ok, f"{len(atlas)} atlas graphs (1044 on 7 vertices), {disagree} disagreements, {secs:.1f}s")
    assert ok


def test_criterion_2_invariant_suite():
    violations = 0
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randrange(1, 13)
        p = 0.2 if seed % 2 else 0.5
        g = random_graph(n, p, seed)
        k = chi(g)
        violations += clique_number(g)[0] > k
        diam = diameter(g) if is_connected(g) else None
        top = g.n if diam is None else diam
        seq = [chi_rho(g, r) for r in range(top + 1)]
        violations += any(a > b for a, b in zip(seq, seq[1:]))
        if diam is not None:
            violations += seq[diam] != k
        violations += seq[0] != 1
    report(2, violations == 0, f"200 random graphs, {violations} violations")
    assert violations == 0


def test_criterion_3_treeramsey_exhaustive():
    start = time.time()
    failures = runs = 0
    for q, t, h in [(2, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 1)]:
        host = uniform_tree(q * t, h)
        leaves = host.leaves()
        for cols in itertools.product(range(1, q + 1), repeat=len(leaves)):
            runs += 1
            phi = dict(zip(leaves, cols))
            res = treeramsey(host, phi, t)
            sub, keep = res.tree(host)
            good = (uniform_shape(sub) == (t, h) and keep[0] == host.root
                    and {phi[keep[v]] for v in sub.leaves()} == {res.colour})
            failures += not good
    secs = time.time() - start
    ok = failures == 0 and secs < 60
    report(3, ok, f"{runs} colourings, {failures} failures, {secs:.2f}s")
    assert ok


def test_criterion_4_getforest():
    forests = [h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1 and nx.is_forest(h)]
    counts = [sum(1 for h in forests if h.number_of_nodes() == n) for n in range(1, 8)]
    # non-isomorphic forests on n vertices: 1, 2, 3, 6, 10, 20, 37
    counted = counts == [1, 2, 3, 6, 10, 20, 37]
    failures = runs = 0
    for h in forests:
        j = from_nx(h)
        for k in (1, 2, 3):
            runs += 1
            fam, iso = getforest(j, k)
            ov = overlap_graph(fam, k)
            same = ov.edges() == j.edges() and iso == list(range(j.n))
            iso_nx = nx.is_isomorphic(nx.Graph(ov.edges()) if ov.edge_count else nx.empty_graph(ov.n),
                                      nx.Graph(j.edges()) if j.edge_count else nx.empty_graph(j.n))
            nodes_ok = ov.n == j.n
            failures += not (same and iso_nx and nodes_ok) or limbs_share_end(fam)
    small = sum(counts[:6])
    ok = counted and failures == 0
    report(4, ok, f"{small} forests on <= 6 vertices plus {counts[6]} on 7, {runs} runs, {failures} failures")
    assert ok


def _mutations(g, pt, rng):
    t = pt.shape
    leaves = t.leaves()
    out = []
    u = rng.choice(leaves)
    v = rng.choice(t.ancestors(u, strict=True))
    c = rng.choice(members(pt.C[u]))
    x = members(g.adj[c] & pt.X[v])[0]
    out.append(("leaf-cover", g.with_edges(remove=[(x, c)])))
    a, b = rng.sample(leaves, 2)
    out.append(("incomparable-edge", g.with_edges(add=[(rng.choice(members(pt.cset(a))),
                                                        rng.choice(members(pt.cset(b))))])))
    u = rng.choice(leaves)
    v = rng.choice(t.ancestors(u, strict=True))
    out.append(("descendant-Y-edge", g.with_edges(add=[(rng.choice(members(pt.C[u])),
                                                        rng.choice(members(pt.Y[v])))])))
    return out


def test_criterion_5_round_trip_and_mutations():
    from bananatree.pineapple import PineappleTree

    passed = killed = total = 0
    for seed in range(100):
        rng = random.Random(seed)
        shape = random_shape(rng.randrange(3, 11), rng, min_leaves=2)
        flavour = rng.choice(["barren", "fruitful", "mixed"])
        g, pt = build_synthetic_pineapple_tree(shape, {"attach": rng.choice([1, 2, "pendant"])},
                                               flavour=flavour, seed=seed)
        back = PineappleTree.from_json(json.loads(json.dumps(pt.to_json())), g)
        passed += verify_pineapple_tree(back)[0]
        for tag, mutated in _mutations(g, pt, rng):
            total += 1
            ok, bad = verify_pineapple_tree(PineappleTree(pt.shape, mutated, pt.X, pt.Y, pt.C, pt.z0))
            killed += (not ok) and any(x.startswith(tag) for x in bad)
    ok = passed == 100 and killed == total == 300
    report(5, ok, f"{passed}/100 trees verified, {killed}/{total} mutations killed with the right tag")
    assert ok


def test_criterion_6_prune():
    good = runs = 0
    for seed in range(50):
        rng = random.Random(1000 + seed)
        while True:
            shape = random_shape(rng.randrange(4, 9), rng)
            if shape.height >= 2:
                break
        g, pt = build_synthetic_pineapple_tree(shape, {"attach": "pendant", "blob": [2, 2, 2]},
                                               flavour="mixed", seed=seed)
        assert "mixed" in classify_triples(pt).values()
        res = prune(pt)
        runs += 1
        out = res.tree
        floors = all(chi(g, out.C[u]) * 2 ** res.splits[u] >= chi(g, pt.C[u]) for u in shape.leaves())
        good += ("mixed" not in classify_triples(out).values() and verify_pineapple_tree(out)[0] and floors)
    ok = good == runs == 50
    report(6, ok, f"{good}/{runs} pruned trees mixed-free, valid and above their chi floors")
    assert ok


def _extract(kind):
    if kind == "banana-tree":
        g, b = plant_banana_tree_instance(path_graph(3), 2, (1, 2))
        return g, extract_banana_tree(b["tree"], b["limbs"], b["iso"], b["skeleton"], b["spec"], b["n"])
    if kind == "banana-cycle":
        g, b = plant_fat_cycle_instance(3, 3)
        return g, extract_banana_cycle(b["tree"], 3, 3)
    g, b = plant_fat_triangle_instance(3)
    return g, extract_fat_triangle(b["tree"], 3, 1)


def test_criterion_7_pipelines(tmp_path):
    env = dict(os.environ, PYTHONPATH=SRC)
    lines, ok = [], True
    for kind in ("banana-tree", "banana-cycle", "fat-triangle"):
        start = time.time()
        g, out = _extract(kind)
        gpath, cpath = tmp_path / f"{kind}.txt", tmp_path / f"{kind}.json"
        write_graph(g, str(gpath))
        cpath.write_text(json.dumps(encode(out, {"pipeline": kind})))
        proc = subprocess.run([sys.executable, "-m", "bananatree.cli", "verify", "--graph", str(gpath),
                               "--certificate", str(cpath)], capture_output=True, text=True, env=env)
        secs = time.time() - start
        accepted = proc.returncode == 0 and json.loads(proc.stdout)["ok"]
        ok &= accepted and secs < 300
        lines.append(f"{kind} {'accepted' if accepted else 'rejected'} {secs:.1f}s")
    report(7, ok, "; ".join(lines))
    assert ok


def test_criterion_8_immersions():
    results = []
    for n in (2, 3):
        g, b = plant_barren_path_instance(n)
        out = barren_to_immersion(b["tree"], n)
        results.append(verify_immersion(g, out.embedding)[0])
    for nu in (3, 4, 5):
        g = build_k_nu_1(nu)
        emb = find_immersion(g, nu)
        results.append(emb is not None and verify_immersion(g, emb)[0])
    ok = all(results)
    report(8, ok, f"barren path n=2,3 and K_nu^1 nu=3,4,5: {sum(results)}/5 verified")
    assert ok


def test_criterion_9_distant_split():
    runs = verified = 0
    kinds = set()
    for seed in range(20):
        for g, c, taus in ((relabel_seeded(grotzsch_graph(), seed), 2, (3, 4)),
                           (plant_two_blob_instance(1, 4, seed), 3, (1, 10))):
            for tau in taus:
                z = range(g.n)
                out = distant_split(g, z, 3, 1, c, tau)
                runs += 1
                kinds.add(out.kind)
                verified += verify_outcome(g, out, z)[0]
    ok = verified == runs
    report(9, ok, f"{verified}/{runs} outcomes re-verified; kinds seen: {', '.join(sorted(kinds))}")
    assert ok


def test_criterion_10_constants():
    # star targets at (d, s, kappa) = (1, 1, 2): R(3, 1) + 1 = 1 + 1
    star = constants.star_targets(2, 1, 1) == ramsey_bound(3, 1) + 1 == 2
    # chain at (c, tau, ell, k) = (0, 1, 2, 2): c_2 = 2, c_1 = 2*2 + 0, c_0 = 2*4 + 0
    chain = constants.distant_chain(0, 1, 2, 2) == [8, 4, 2]
    q = constants.platonic_q(0) == 2 ** 2 ** 0 == 2 and constants.platonic_q(1) == 2 ** 2 ** 2 == 16
    ok = star and chain and q
    report(10, ok, f"star_targets {star}, c-chain {chain}, q(0)/q(1) {q}")
    assert ok
